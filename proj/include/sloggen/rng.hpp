#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace sloggen {

// splitmix64 finalizer, used to hash stream ids when deriving child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child stream seed for a given id. Niche streams use the niche id; each
// niche further derives a sampling stream (id 1) and a mutation stream (id 2)
// so that fresh-sample sequences do not depend on how many random draws
// mutation happened to consume.
constexpr std::uint64_t derive_stream(std::uint64_t seed,
                                      std::uint64_t stream_id) noexcept {
  return seed ^ splitmix64(stream_id);
}

// Deterministic RNG. std::mt19937_64 output is bit-exact per the standard;
// the helpers below avoid std::uniform_*_distribution, whose outputs differ
// between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [0, n). n must be positive.
  std::size_t bounded(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - kMax % bound;  // multiple of bound
    for (;;) {
      const std::uint64_t x = gen_();
      if (x < limit) return static_cast<std::size_t>(x % bound);
    }
  }

  // Uniform double in [0, 1).
  double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sloggen
