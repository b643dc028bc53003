#pragma once

#include <cstdint>
#include <random>

namespace fewpaths {

// splitmix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream-splitting rule: stream `id` of `seed` is seeded with
// mix_seed(seed ^ mix_seed(id)). Batch instance i uses seed + i.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t id) noexcept {
  return mix_seed(seed ^ mix_seed(id));
}

// mt19937_64 with hand-written conversions so that the drawn values do not
// depend on the standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform on 0..bound-1 by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool bernoulli(double p) { return uniform01() < p; }

private:
  std::mt19937_64 engine_;
};

} // namespace fewpaths
