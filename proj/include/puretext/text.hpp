#pragma once

#include <string>
#include <vector>

#include "puretext/rng.hpp"

namespace puretext {

/// Sentinel written into masked positions. An ingested token that is
/// literally equal to the sentinel is escaped to kEscapedMask by tokenize()
/// so a masked position can never be confused with real input.
inline constexpr const char* kMaskSentinel = "[MASK]";
inline constexpr const char* kEscapedMask = "\\[MASK]";

/// Immutable token sequence. Tokens are nonempty; tokenize() additionally
/// guarantees they contain no whitespace.
struct Text {
  std::vector<std::string> tokens;

  int length() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Text&) const = default;
};

/// A text with a gold class label (labels are 1-based).
struct LabeledText {
  Text text;
  int label = 0;
};

/// A sampled keep-index set H, drawn uniformly from the k-subsets of
/// {1..total_len}. Positions outside keep_set get masked.
struct MaskPlan {
  std::vector<int> keep_set;  // sorted, 1-based
  int total_len = 0;
  int keep_count = 0;
};

/// Token sequence where every non-kept position holds the mask sentinel.
struct MaskedText {
  std::vector<std::string> tokens;

  int length() const { return static_cast<int>(tokens.size()); }
  bool operator==(const MaskedText&) const = default;
};

/// Deterministic tokenizer: splits on whitespace and detaches the
/// punctuation characters .,!?;:'"() as single-character tokens. No case
/// folding. Throws EmptyTextError when no token results.
Text tokenize(const std::string& raw);

/// Joins tokens with single spaces. tokenize(detokenize(t)) == t for any t
/// produced by tokenize().
std::string detokenize(const Text& x);
std::string detokenize(const MaskedText& x);

/// 1-based positions where a and b differ. Requires equal lengths
/// (LengthMismatchError otherwise); length-changing edits must be aligned
/// by the caller before diffing.
std::vector<int> hamming_diff(const Text& a, const Text& b);

/// Number of tokens left unmasked for a text of token_count tokens at the
/// given mask rate: nearest-integer of (1-mask_rate)*token_count with .5
/// rounding up, clamped to [0, token_count].
int keep_count(int token_count, double mask_rate);

/// Uniform draw over the k-subsets of {1..total_len}. Deterministic given
/// the stream state.
MaskPlan sample_mask_plan(int total_len, int keep, RngStream& rng);

/// Masking operation: position i keeps x_i iff i is in plan.keep_set, else
/// it becomes the mask sentinel. Output length equals input length.
MaskedText apply_mask(const Text& x, const MaskPlan& plan);

}  // namespace puretext
