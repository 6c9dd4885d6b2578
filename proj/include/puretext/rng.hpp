#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace puretext {

// Every random decision in the pipeline draws from a stream keyed by
// (global seed, purpose tag, index). Results are therefore independent of
// scheduling order: trial 17 produces the same draw whether it runs first,
// last, or on another thread.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Stream key for (seed, purpose tag, index). Keys may be chained: the
/// result is itself usable as a seed for a further derivation.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::string_view tag,
                                   std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ fnv1a64(tag)) ^ index);
}

/// A deterministic random stream. Thin wrapper over mt19937_64 plus an
/// unbiased bounded-draw helper, so sampling behaves identically on every
/// platform the standard engine does.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : engine_(key) {}
  RngStream(std::uint64_t seed, std::string_view tag, std::uint64_t index)
      : engine_(derive_key(seed, tag, index)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). Rejection sampling; n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (kMax % n + 1) % n;
    for (;;) {
      const std::uint64_t r = engine_();
      if (rem == 0 || r <= kMax - rem) return r % n;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace puretext
