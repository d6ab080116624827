#include "qf/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qf {

double Mat2::inf_norm() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 Mat2::inverse(double tol) const {
  Complex determinant = det();
  if (std::abs(determinant) <= tol * std::max(1.0, inf_norm() * inf_norm())) {
    throw SingularMatrixError("matrix is singular within tolerance");
  }
  Complex inv = 1.0 / determinant;
  return {d * inv, -b * inv, -c * inv, a * inv};
}

Mat2 Mat2::pow(int k, double tol) const {
  Mat2 base = k >= 0 ? *this : inverse(tol);
  int e = k >= 0 ? k : -k;
  Mat2 acc = identity();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

double rel_err(const Mat2& m, const Mat2& n) {
  return (m - n).inf_norm() / std::max(1.0, n.inf_norm());
}

Mat2 conj_op(const Mat2& a, const Mat2& b, int n, double tol) {
  Mat2 bn = b.pow(n, tol);
  return bn.inverse(tol) * a * bn;
}

namespace {

bool lex_before(Complex u, Complex v) {
  if (u.real() != v.real()) return u.real() < v.real();
  return u.imag() < v.imag();
}

}  // namespace

ClassLabel ClassLabel::diag_pair(Complex l1, Complex l2) {
  if (l1 == l2) throw std::invalid_argument("diag_pair eigenvalues must be distinct");
  if (l1 == 0.0 || l2 == 0.0) throw std::invalid_argument("eigenvalues must be nonzero");
  if (lex_before(l2, l1)) std::swap(l1, l2);
  return ClassLabel(Kind::DiagPair, l1, l2);
}

ClassLabel ClassLabel::jordan(Complex l) {
  if (l == 0.0) throw std::invalid_argument("eigenvalue must be nonzero");
  return ClassLabel(Kind::Jordan, l, l);
}

ClassLabel ClassLabel::scalar(Complex l) {
  if (l == 0.0) throw std::invalid_argument("eigenvalue must be nonzero");
  return ClassLabel(Kind::Scalar, l, l);
}

Mat2 ClassLabel::base_point() const {
  switch (kind_) {
    case Kind::DiagPair:
      return Mat2::diag(lam1_, lam2_);
    case Kind::Jordan:
      return {lam1_, 1.0, 0.0, lam1_};
    case Kind::Scalar:
      return {lam1_, 0.0, 0.0, lam1_};
  }
  throw std::logic_error("unreachable");
}

bool ClassLabel::contains(const Mat2& m, double tol) const {
  double scale = std::max(1.0, m.inf_norm());
  bool scalar_like = std::abs(m.b) <= tol * scale && std::abs(m.c) <= tol * scale &&
                     std::abs(m.a - m.d) <= tol * scale;
  switch (kind_) {
    case Kind::Scalar:
      return scalar_like && std::abs(m.a - lam1_) <= tol * scale;
    case Kind::Jordan:
      return !scalar_like && std::abs(m.trace() - class_trace()) <= tol * scale &&
             std::abs(m.det() - class_det()) <= tol * scale * scale;
    case Kind::DiagPair:
      return !scalar_like && std::abs(m.trace() - class_trace()) <= tol * scale &&
             std::abs(m.det() - class_det()) <= tol * scale * scale;
  }
  throw std::logic_error("unreachable");
}

std::string ClassLabel::str() const {
  switch (kind_) {
    case Kind::DiagPair:
      return "M{" + format_complex(lam1_) + "," + format_complex(lam2_) + "}";
    case Kind::Jordan:
      return "M{" + format_complex(lam1_) + "}";
    case Kind::Scalar:
      return "scalar{" + format_complex(lam1_) + "}";
  }
  throw std::logic_error("unreachable");
}

ClassLabel classify(const Mat2& m, double tol) {
  double scale = std::max(1.0, m.inf_norm());
  if (std::abs(m.det()) <= kSingularTol * scale * scale) {
    throw SingularMatrixError("classify: matrix is singular");
  }
  Complex half_tr = 0.5 * m.trace();
  bool scalar_like = std::abs(m.b) <= tol * scale && std::abs(m.c) <= tol * scale &&
                     std::abs(m.a - m.d) <= tol * scale;
  if (scalar_like) return ClassLabel::scalar(half_tr);
  Complex disc = m.trace() * m.trace() - 4.0 * m.det();
  if (std::abs(disc) <= tol * scale * scale) return ClassLabel::jordan(half_tr);
  Complex root = std::sqrt(disc);
  return ClassLabel::diag_pair(half_tr + 0.5 * root, half_tr - 0.5 * root);
}

Mat2 scale_map(const Mat2& m, Complex k) {
  if (k == 0.0) throw std::invalid_argument("scale_map: k must be nonzero");
  return k * m;
}

Mat2 pgl_normalize(const Mat2& m) {
  Complex entries[4] = {m.a, m.b, m.c, m.d};
  int best = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(entries[i]) > std::abs(entries[best])) best = i;
  }
  if (entries[best] == 0.0) throw std::invalid_argument("pgl_normalize: zero matrix");
  Complex inv = 1.0 / entries[best];
  return inv * m;
}

double projective_distance(const Mat2& m, const Mat2& n) {
  // least-squares scalar fit k = <m, n> / <n, n>
  Complex inner = m.a * std::conj(n.a) + m.b * std::conj(n.b) + m.c * std::conj(n.c) +
                  m.d * std::conj(n.d);
  double denom = std::norm(n.a) + std::norm(n.b) + std::norm(n.c) + std::norm(n.d);
  if (denom == 0.0) throw std::invalid_argument("projective_distance: zero matrix");
  Complex k = inner / denom;
  return rel_err(m, k * n);
}

namespace {

Complex principal_nth_root(Complex z, int n) {
  // exp(log z / n) with the principal branch, arg in (-pi, pi]
  return std::exp(std::log(z) / static_cast<double>(n));
}

}  // namespace

Mat2 nth_root_matrix(const Mat2& p, int n, double tol) {
  if (n < 1) throw std::invalid_argument("nth_root_matrix: n must be >= 1");
  if (n == 1) return p;
  ClassLabel cls = classify(p, tol);
  if (cls.is_scalar()) {
    return principal_nth_root(cls.lam1(), n) * Mat2::identity();
  }
  if (cls.is_jordan()) {
    Complex lam = cls.lam1();
    Mat2 nilpotent = p - lam * Mat2::identity();
    Complex root = principal_nth_root(lam, n);
    return root * (Mat2::identity() + (1.0 / (static_cast<double>(n) * lam)) * nilpotent);
  }
  Complex l1 = cls.lam1(), l2 = cls.lam2();
  // eigenvector of p for eigenvalue l: kernel of (p - l I), taking the row
  // of larger norm for stability
  auto eigenvector = [&](Complex l) -> std::pair<Complex, Complex> {
    Complex r1x = p.a - l, r1y = p.b;
    Complex r2x = p.c, r2y = p.d - l;
    double n1 = std::abs(r1x) + std::abs(r1y);
    double n2 = std::abs(r2x) + std::abs(r2y);
    if (n1 >= n2) return {-r1y, r1x};
    return {-r2y, r2x};
  };
  auto [v1x, v1y] = eigenvector(l1);
  auto [v2x, v2y] = eigenvector(l2);
  Mat2 v{v1x, v2x, v1y, v2y};
  Mat2 droot = Mat2::diag(principal_nth_root(l1, n), principal_nth_root(l2, n));
  return v * droot * v.inverse();
}

Mat2 sample_invertible(Rng& rng) {
  for (;;) {
    Complex a = rng.next_in_unit_square();
    Complex b = rng.next_in_unit_square();
    Complex c = rng.next_in_unit_square();
    Complex d = rng.next_in_unit_square();
    Mat2 m{a, b, c, d};
    if (std::abs(m.det()) >= 0.1) return m;
  }
}

Mat2 sample_in_class(const ClassLabel& cls, Rng& rng) {
  Mat2 x = sample_invertible(rng);
  return conj_op(cls.base_point(), x, 1);
}

std::string format_complex(Complex z) {
  std::ostringstream out;
  out << z.real();
  if (z.imag() != 0.0) {
    out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return out.str();
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  // split into real and imaginary terms at a '+'/'-' that is not part of an
  // exponent and not leading
  auto parse_term = [](const std::string& term, double& re, double& im) {
    if (term.empty()) throw std::invalid_argument("empty term in complex literal");
    if (term.back() == 'i' || term.back() == 'I') {
      std::string body = term.substr(0, term.size() - 1);
      if (body.empty() || body == "+") {
        im += 1.0;
      } else if (body == "-") {
        im += -1.0;
      } else {
        im += std::stod(body);
      }
    } else {
      re += std::stod(term);
    }
  };
  double re = 0.0, im = 0.0;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i == s.size() ||
        ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')) {
      parse_term(s.substr(start, i - start), re, im);
      start = i;
    }
  }
  return {re, im};
}

}  // namespace qf
