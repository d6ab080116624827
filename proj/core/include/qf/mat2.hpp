#ifndef QF_MAT2_HPP
#define QF_MAT2_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include "qf/rng.hpp"

namespace qf {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;   // relative, max-norm
inline constexpr double kSingularTol = 1e-12;

struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

/// 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
  Complex a{}, b{}, c{}, d{};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(Complex l1, Complex l2) { return {l1, 0.0, 0.0, l2}; }

  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }
  double inf_norm() const;

  /// Throws SingularMatrixError when |det| <= tol * scale.
  Mat2 inverse(double tol = kSingularTol) const;

  friend Mat2 operator+(const Mat2& m, const Mat2& n) {
    return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
  }
  friend Mat2 operator-(const Mat2& m, const Mat2& n) {
    return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
  }
  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend Mat2 operator*(Complex k, const Mat2& m) { return {k * m.a, k * m.b, k * m.c, k * m.d}; }

  Mat2 pow(int k, double tol = kSingularTol) const;
};

/// ||m - n||_inf / max(1, ||n||_inf).
double rel_err(const Mat2& m, const Mat2& n);

/// b^{-n} a b^n; n may be negative (the dual operation).
Mat2 conj_op(const Mat2& a, const Mat2& b, int n, double tol = kSingularTol);

/// Conjugacy-class descriptor. DiagPair holds two distinct eigenvalues in
/// lexicographic (re, im) order; Jordan and Scalar hold one.
class ClassLabel {
 public:
  enum class Kind { DiagPair, Jordan, Scalar };

  static ClassLabel diag_pair(Complex l1, Complex l2);
  static ClassLabel jordan(Complex l);
  static ClassLabel scalar(Complex l);

  Kind kind() const { return kind_; }
  bool is_diag_pair() const { return kind_ == Kind::DiagPair; }
  bool is_jordan() const { return kind_ == Kind::Jordan; }
  bool is_scalar() const { return kind_ == Kind::Scalar; }

  Complex lam1() const { return lam1_; }
  Complex lam2() const { return lam2_; }  // == lam1 for Jordan/Scalar

  Complex class_trace() const { return lam1_ + lam2_; }
  Complex class_det() const { return lam1_ * lam2_; }

  /// D(lam1, lam2) for DiagPair, [[lam, 1], [0, lam]] for Jordan, lam*I for
  /// Scalar.
  Mat2 base_point() const;

  /// Membership by trace/determinant within tol (and non-scalarity where the
  /// class requires it).
  bool contains(const Mat2& m, double tol = kDefaultTol) const;

  std::string str() const;

 private:
  ClassLabel(Kind k, Complex l1, Complex l2) : kind_(k), lam1_(l1), lam2_(l2) {}
  Kind kind_;
  Complex lam1_, lam2_;
};

/// Eigenvalue-based classification; Scalar iff m is a scalar matrix within
/// tol, Jordan iff the discriminant vanishes within tol and m is not scalar.
ClassLabel classify(const Mat2& m, double tol = kDefaultTol);

Mat2 scale_map(const Mat2& m, Complex k);

/// Deterministic projective representative: divides by the entry of largest
/// modulus (ties broken in row-major order).
Mat2 pgl_normalize(const Mat2& m);

/// ||m - k n||_inf / max(1, ||k n||_inf) minimized over scalars k; zero iff
/// m and n agree projectively. Stable where the normalized representative
/// is not (tied entry moduli).
double projective_distance(const Mat2& m, const Mat2& n);

/// Some q with q^n = p: principal eigenvalue roots in the diagonalizable
/// case, lam^{1/n} (I + N/(n lam)) in the Jordan case (exact for 2x2).
Mat2 nth_root_matrix(const Mat2& p, int n, double tol = kDefaultTol);

/// Random invertible matrix: entries uniform in the complex unit square,
/// redrawn until |det| >= 0.1.
Mat2 sample_invertible(Rng& rng);

/// Conjugates the class base point by a sampled invertible matrix.
Mat2 sample_in_class(const ClassLabel& cls, Rng& rng);

std::string format_complex(Complex z);
/// Parses "1", "-2.5", "i", "-i", "2+3i", "1e-3-0.25i".
Complex parse_complex(const std::string& text);

}  // namespace qf

#endif
