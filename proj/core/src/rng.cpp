#include "hyptest/rng.hpp"

#include <atomic>

namespace hyptest {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& ctr,
                       const std::array<std::uint32_t, 2>& key) {
  const std::uint64_t prod0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
  const std::uint64_t prod1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(prod0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(prod0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(prod1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(prod1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

std::atomic<std::uint64_t> g_engines_created{0};

inline double to_unit_double(std::uint32_t lo, std::uint32_t hi) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    round_once(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

PhiloxStream::PhiloxStream(std::array<std::uint32_t, 2> key, std::uint32_t stream_id,
                           std::uint64_t block)
    : key_(key),
      counter_{0u, stream_id, static_cast<std::uint32_t>(block),
               static_cast<std::uint32_t>(block >> 32)} {}

std::array<std::uint32_t, 4> PhiloxStream::next_words() {
  has_pending_ = false;
  const auto words = philox4x32_10(counter_, key_);
  ++counter_[0];
  return words;
}

double PhiloxStream::next_double() {
  if (has_pending_) {
    has_pending_ = false;
    return pending_;
  }
  const auto words = next_words();
  pending_ = to_unit_double(words[2], words[3]);
  has_pending_ = true;
  return to_unit_double(words[0], words[1]);
}

PhiloxEngine::PhiloxEngine(std::uint64_t seed)
    : seed_(seed),
      key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {
  g_engines_created.fetch_add(1, std::memory_order_relaxed);
}

PhiloxStream PhiloxEngine::stream(std::uint32_t stream_id, std::uint64_t block) const {
  return PhiloxStream(key_, stream_id, block);
}

std::uint64_t PhiloxEngine::engines_created() {
  return g_engines_created.load(std::memory_order_relaxed);
}

}  // namespace hyptest
