#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cascadia {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded random stream.
///
/// Wraps mt19937_64 but does its own conversion to doubles and bounded
/// integers, so the sequence of draws is identical across standard
/// library implementations. Streams for parallel trials are derived with
/// Rng::stream(master_seed, {keys...}); the same keys always yield the
/// same stream regardless of which thread consumes it.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static Rng stream(std::uint64_t master_seed,
                    std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = splitmix64(master_seed);
    for (auto k : keys) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
    return Rng(h);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling on the top of the range to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  // UniformRandomBitGenerator interface.
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cascadia
