#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace antimagic {

// splitmix64 (Steele, Lea & Flood). Fixed 64-bit state transition, used here
// only to expand a (base_seed, stream_index) pair into engine state, so two
// runs with the same pair produce identical streams on every platform.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256** 1.0 (Blackman & Vigna), seeded via splitmix64.
// Streams with distinct stream_index start at unrelated points of the
// splitmix64 output sequence and behave as independent generators.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t base_seed, std::uint64_t stream_index = 0)
      : base_seed_(base_seed), stream_index_(stream_index) {
    SplitMix64 sm{base_seed + 0x9e3779b97f4a7c15ULL * stream_index};
    for (auto& s : state_) s = sm.next();
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t base_seed() const { return base_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  result_type operator()() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased integer in [0, bound) by masked rejection. Every value is
  // exactly equally likely, which the shuffle's uniformity guarantee needs.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    std::uint64_t x;
    do {
      x = (*this)() & mask;
    } while (x >= bound);
    return x;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
  }

  std::array<std::uint64_t, 4> state_;
  std::uint64_t base_seed_;
  std::uint64_t stream_index_;
};

}  // namespace antimagic
