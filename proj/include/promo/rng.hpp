#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace promo {

/// FNV-1a 64-bit hash. Stable across platforms, used for stream derivation
/// and experiment arm assignment.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {
constexpr std::uint64_t splitmix64_step(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Deterministic seeded random stream (splitmix64 core).
///
/// Every sampling operation in the library takes one of these explicitly.
/// Child streams are derived from the *seed* plus a label, not from the
/// evolving state, so `derive("u42")` yields the same stream no matter how
/// much the parent has been consumed. Per-user streams are derived as
/// rng.derive(user_id), which makes replays exact for a given global seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() { return detail::splitmix64_step(state_); }

  /// Uniform double in [0, 1) with 53 significant bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Box-Muller; one value per call, two uniforms consumed.
  double normal(double mean, double stddev) {
    double u1 = 1.0 - next_double();  // (0, 1]
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Uniform integer in [0, n), unbiased (Lemire widening multiply).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) return 0;
    while (true) {
      std::uint64_t x = next_u64();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= static_cast<std::uint64_t>(-static_cast<std::int64_t>(n)) % n)
        return static_cast<std::uint64_t>(m >> 64);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Independent child stream identified by (seed, label).
  Rng derive(std::string_view label) const {
    std::uint64_t s = seed_ ^ (fnv1a64(label) * 0x9e3779b97f4a7c15ull);
    detail::splitmix64_step(s);
    return Rng(s);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace promo
