#pragma once

#include <stdexcept>

namespace puretext {

/// Base type for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input string holds no tokens.
struct EmptyTextError : Error {
  using Error::Error;
};

/// Two sequences that must share a length do not.
struct LengthMismatchError : Error {
  using Error::Error;
};

/// Mask plan is inconsistent with the text it is applied to.
struct InvalidPlanError : Error {
  using Error::Error;
};

/// Training corpus holds no usable documents.
struct EmptyCorpusError : Error {
  using Error::Error;
};

/// Label set has gaps or fewer than two classes.
struct IncompleteLabelsError : Error {
  using Error::Error;
};

/// Score vectors of different widths were combined.
struct ShapeMismatchError : Error {
  using Error::Error;
};

/// Numeric argument outside its documented range.
struct InvalidArgsError : Error {
  using Error::Error;
};

/// Evaluation dataset holds no samples.
struct EmptyDatasetError : Error {
  using Error::Error;
};

}  // namespace puretext
