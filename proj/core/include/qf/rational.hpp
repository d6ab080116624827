#ifndef QF_RATIONAL_HPP
#define QF_RATIONAL_HPP

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qf {

using BigRat = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational a + b*i. Nonexistence refutations re-run on this
/// type when every input reconstructs as a rational, so they never rest on
/// floating-point error.
struct GaussRat {
  BigRat re, im;

  GaussRat() = default;
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussRat(long long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }
  /// |z|^2 as a rational.
  BigRat norm() const { return re * re + im * im; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

/// Reconstructs x as a rational with denominator <= max_den whose nearest
/// double equals x exactly. Returns nullopt for values that do not look
/// rational (so exact refutation paths simply stay disabled for them).
std::optional<BigRat> rationalize(double x, long long max_den = 1'000'000);
std::optional<GaussRat> rationalize(std::complex<double> z, long long max_den = 1'000'000);

struct GrMat2 {
  GaussRat a, b, c, d;
  GaussRat trace() const { return a + d; }
  GaussRat det() const { return a * d - b * c; }
  friend GrMat2 operator*(const GrMat2& m, const GrMat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend GrMat2 operator-(const GrMat2& m, const GrMat2& n) {
    return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
  }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
};

/// Exact null space of a 4x4 Gaussian-rational matrix (row-major).
/// Basis vectors are normalized so their first nonzero entry is 1.
std::vector<std::array<GaussRat, 4>> nullspace4(std::array<std::array<GaussRat, 4>, 4> m);

}  // namespace qf

#endif
