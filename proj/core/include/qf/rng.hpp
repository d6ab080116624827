#ifndef QF_RNG_HPP
#define QF_RNG_HPP

#include <complex>
#include <cstdint>

namespace qf {

/// Deterministic 64-bit generator (splitmix64). Output is identical on
/// every platform, which keeps sampled witnesses and reports reproducible.
/// Sampling loops derive one generator per sample as Rng(seed + index), so
/// results do not depend on iteration schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Real and imaginary part uniform in [0, 1).
  std::complex<double> next_in_unit_square() {
    double re = next_unit();
    double im = next_unit();
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace qf

#endif
