#pragma once

#include <cstdint>

namespace ck {

// splitmix64 generator. Used instead of <random> so that identical seeds
// give identical streams on every platform/compiler.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : state_(seed) {}

  // Independent stream for one case of a sharded run; failures reproduce
  // in isolation from (seed, case_index) alone.
  static RandomSource for_case(std::uint64_t seed, std::uint64_t case_index) {
    return RandomSource(mix(seed ^ mix(case_index + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform-ish integer in [lo, hi], inclusive. The modulo bias is
  // irrelevant for test-input generation and keeps the stream portable.
  long long int_in(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace ck
