#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace scfde {

namespace detail {

// splitmix64; used only to spread seed material before it enters mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic random source. All randomness in the library flows through
/// this class so that a (seed, trial, stream) triple reproduces bit-identical
/// results; the Gaussian path is hand-rolled Box-Muller on top of the raw
/// mt19937_64 words rather than std::normal_distribution, whose output
/// sequence is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Generator for an independent (trial, stream) slot of a master seed.
  /// Splitting rule: mt19937_64 seeded with
  /// splitmix64 chain over (seed, trial, stream).
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial,
                       std::uint64_t stream = 0) {
    std::uint64_t s = seed;
    std::uint64_t a = detail::splitmix64(s);
    s ^= trial * 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = detail::splitmix64(s);
    s ^= stream * 0xd1b54a32d192ed03ULL;
    std::uint64_t c = detail::splitmix64(s);
    return Rng(a ^ (b * 0x2545f4914f6cdd1dULL) ^ c);
  }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(gen_() % static_cast<std::uint64_t>(n));
  }

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly-symmetric complex normal with unit variance, CN(0, 1).
  std::complex<double> cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace scfde
