#pragma once

#include <array>
#include <cstdint>

namespace hyptest {

/// One Philox4x32-10 block: maps a 128-bit counter to 128 pseudo-random
/// bits under a 64-bit key (Salmon et al., SC'11). Exposed so tests can
/// check the published known-answer vectors.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// A single substream of uniform doubles. Substreams are addressed by
/// (stream id, block index) which occupy fixed counter words, so any two
/// distinct addresses are independent and no state is ever shared between
/// parallel consumers.
class PhiloxStream {
 public:
  PhiloxStream(std::array<std::uint32_t, 2> key, std::uint32_t stream_id,
               std::uint64_t block);

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  /// Advances one raw 128-bit block; discards any buffered double.
  std::array<std::uint32_t, 4> next_words();

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;  // [draw index, stream id, block lo, block hi]
  double pending_ = 0.0;
  bool has_pending_ = false;
};

/// Root of the generator: holds the seed-derived key and hands out
/// substreams. Deterministic: identical (seed, stream id, block) yields an
/// identical sequence regardless of thread count.
class PhiloxEngine {
 public:
  explicit PhiloxEngine(std::uint64_t seed);

  PhiloxStream stream(std::uint32_t stream_id, std::uint64_t block) const;
  std::uint64_t seed() const { return seed_; }

  /// Process-wide count of engines constructed; lets tests verify that
  /// analytics-only code paths never touch the generator.
  static std::uint64_t engines_created();

 private:
  std::uint64_t seed_;
  std::array<std::uint32_t, 2> key_;
};

}  // namespace hyptest
