#include "qf/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace qf {

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw std::domain_error("gaussian rational division by zero");
  BigRat n = b.norm();
  GaussRat num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::optional<BigRat> rationalize(double x, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued-fraction expansion, accepted only if the result round-trips
  // to the exact same double
  double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int step = 0; step < 64; ++step) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = v - fl;
    if (q1 > 0 && static_cast<double>(p1) / static_cast<double>(q1) == x) break;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 <= 0) return std::nullopt;
  BigRat r(p1, q1);
  if (static_cast<double>(r) != x) return std::nullopt;
  return r;
}

std::optional<GaussRat> rationalize(std::complex<double> z, long long max_den) {
  auto re = rationalize(z.real(), max_den);
  auto im = rationalize(z.imag(), max_den);
  if (!re || !im) return std::nullopt;
  return GaussRat{*re, *im};
}

std::vector<std::array<GaussRat, 4>> nullspace4(std::array<std::array<GaussRat, 4>, 4> m) {
  constexpr int N = 4;
  int pivot_col_of_row[N];
  bool col_is_pivot[N] = {false, false, false, false};
  int rank = 0;
  for (int col = 0; col < N && rank < N; ++col) {
    int pivot = -1;
    for (int row = rank; row < N; ++row) {
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    GaussRat inv = GaussRat(1) / m[rank][col];
    for (int j = 0; j < N; ++j) m[rank][j] = m[rank][j] * inv;
    for (int row = 0; row < N; ++row) {
      if (row == rank || m[row][col].is_zero()) continue;
      GaussRat factor = m[row][col];
      for (int j = 0; j < N; ++j) m[row][j] = m[row][j] - factor * m[rank][j];
    }
    pivot_col_of_row[rank] = col;
    col_is_pivot[col] = true;
    ++rank;
  }
  std::vector<std::array<GaussRat, 4>> basis;
  for (int col = 0; col < N; ++col) {
    if (col_is_pivot[col]) continue;
    std::array<GaussRat, 4> v{GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0)};
    v[col] = GaussRat(1);
    for (int row = 0; row < rank; ++row) v[pivot_col_of_row[row]] = -m[row][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qf
