#pragma once

// Portable seeded randomness for the benchmark. Both generators are fully
// specified public algorithms, so a given seed yields the same stream on every
// platform and standard library:
//
//   SplitMix64        Steele, Lea & Flood; used for seeding and stream derivation
//   Xoshiro256StarStar Blackman & Vigna; drives the shuffles
//
// Bounded draws use Lemire's multiply-and-reject method, which is unbiased.

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace avl::bench {

class SplitMix64 {
 public:
  constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  constexpr explicit Xoshiro256StarStar(std::uint64_t seed) noexcept {
    SplitMix64 seeder(seed);
    for (auto& word : state_) word = seeder.next();
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
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

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

/// Uniform integer in [0, bound). bound must be positive.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) noexcept {
  __extension__ using u128 = unsigned __int128;
  u128 product = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

/// In-place Fisher-Yates shuffle.
template <class T, class Rng>
void seeded_shuffle(std::span<T> items, Rng& rng) noexcept {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

/// Stream seed for one (purpose, index) pair under a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose, std::uint64_t index) noexcept {
  SplitMix64 mix(master);
  std::uint64_t value = mix.next();
  value ^= SplitMix64(purpose + 0x632be59bd9b4e019ULL).next();
  value = SplitMix64(value).next();
  value ^= SplitMix64(index + 0x8cb92ba72f3d8dd7ULL).next();
  return SplitMix64(value).next();
}

}  // namespace avl::bench
