#include <doctest.h>

#include <cmath>

#include "qf/mat2.hpp"

using namespace qf;

namespace {

bool close(const Mat2& m, const Mat2& n, double tol = 1e-12) { return rel_err(m, n) <= tol; }

}  // namespace

TEST_CASE("conjugation operation") {
  Mat2 swap{0.0, 1.0, 1.0, 0.0};
  CHECK(close(conj_op(Mat2::diag(1.0, -1.0), swap, 1), Mat2::diag(-1.0, 1.0)));
  Mat2 a{0.25, -1.5, Complex(0, 2), 3.0};
  CHECK(close(conj_op(a, Mat2::identity(), 1), a));
  CHECK(close(conj_op(Mat2::diag(1.0, 2.0), Mat2{1.0, 1.0, 0.0, 2.0}, 1),
              Mat2{1.0, -1.0, 0.0, 2.0}));
}

TEST_CASE("conjugation by a near-singular matrix is an error") {
  Mat2 singular{1.0, 2.0, 2.0, 4.0};
  CHECK_THROWS_AS(conj_op(Mat2::identity(), singular, 1), SingularMatrixError);
}

TEST_CASE("negative powers reverse the operation") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 50; ++i) {
    Mat2 a = sample_invertible(rng);
    Mat2 b = sample_invertible(rng);
    CHECK(rel_err(conj_op(conj_op(a, b, 1), b, -1), a) <= 1e-10);
    CHECK(rel_err(conj_op(conj_op(a, b, 3), b, -3), a) <= 1e-9);
  }
}

TEST_CASE("conjugation is right self-distributive") {
  Rng rng(kDefaultSeed + 1);
  for (int i = 0; i < 50; ++i) {
    Mat2 a = sample_invertible(rng);
    Mat2 b = sample_invertible(rng);
    Mat2 c = sample_invertible(rng);
    Mat2 lhs = conj_op(conj_op(a, b, 1), c, 1);
    Mat2 rhs = conj_op(conj_op(a, c, 1), conj_op(b, c, 1), 1);
    CHECK(rel_err(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("classification of the three families") {
  ClassLabel jordan = classify(Mat2{1.0, 1.0, 0.0, 1.0});
  CHECK(jordan.is_jordan());
  CHECK(jordan.lam1() == Complex(1.0));

  ClassLabel pair = classify(Mat2{0.0, 1.0, 1.0, 0.0});
  CHECK(pair.is_diag_pair());
  CHECK(std::abs(pair.lam1() - Complex(-1.0)) <= 1e-12);
  CHECK(std::abs(pair.lam2() - Complex(1.0)) <= 1e-12);

  ClassLabel scalar = classify(Mat2::diag(2.0, 2.0));
  CHECK(scalar.is_scalar());
  CHECK(scalar.lam1() == Complex(2.0));

  CHECK_THROWS_AS(classify(Mat2{1.0, 1.0, 1.0, 1.0}), SingularMatrixError);
}

TEST_CASE("classification is scale-consistent") {
  Rng rng(kDefaultSeed + 2);
  const Complex ks[] = {Complex(2.0), Complex(0, 1), Complex(-0.5, 1.5)};
  for (int i = 0; i < 20; ++i) {
    Mat2 a = sample_invertible(rng);
    ClassLabel before = classify(a);
    for (Complex k : ks) {
      ClassLabel after = classify(scale_map(a, k));
      CHECK(before.kind() == after.kind());
      // eigenvalues scale as a multiset
      Complex s1 = k * before.lam1(), s2 = k * before.lam2();
      double direct = std::abs(after.lam1() - s1) + std::abs(after.lam2() - s2);
      double swapped = std::abs(after.lam1() - s2) + std::abs(after.lam2() - s1);
      CHECK(std::min(direct, swapped) <= 1e-8 * std::max(1.0, std::abs(k)));
    }
  }
}

TEST_CASE("class labels normalize the eigenvalue order and reject degenerate input") {
  ClassLabel c = ClassLabel::diag_pair(3.0, 2.0);
  CHECK(c.lam1() == Complex(2.0));
  CHECK(c.lam2() == Complex(3.0));
  CHECK(close(c.base_point(), Mat2::diag(2.0, 3.0)));
  CHECK_THROWS_AS(ClassLabel::diag_pair(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ClassLabel::jordan(0.0), std::invalid_argument);
}

TEST_CASE("class membership") {
  ClassLabel cls = ClassLabel::diag_pair(1.0, -1.0);
  CHECK(cls.contains(Mat2{0.0, 1.0, 1.0, 0.0}));
  CHECK_FALSE(cls.contains(Mat2::diag(1.0, 1.0)));
  ClassLabel jordan = ClassLabel::jordan(1.0);
  CHECK(jordan.contains(Mat2{1.0, 5.0, 0.0, 1.0}));
  CHECK_FALSE(jordan.contains(Mat2::identity()));  // scalar is excluded
}

TEST_CASE("scaling commutes with conjugation") {
  Rng rng(kDefaultSeed + 3);
  for (int i = 0; i < 30; ++i) {
    Mat2 a = sample_invertible(rng);
    Mat2 b = sample_invertible(rng);
    Complex k(1.5, -0.25);
    CHECK(rel_err(scale_map(conj_op(a, b, 1), k), conj_op(scale_map(a, k), scale_map(b, k), 1)) <=
          1e-10);
  }
  CHECK_THROWS_AS(scale_map(Mat2::identity(), 0.0), std::invalid_argument);
}

TEST_CASE("projective normalization") {
  CHECK(close(pgl_normalize(Mat2::diag(2.0, 4.0)), Mat2::diag(0.5, 1.0)));
  CHECK(close(pgl_normalize(Mat2::identity()), Mat2::identity()));
  // ties break in row-major order
  CHECK(close(pgl_normalize(Mat2::diag(3.0, 3.0)), Mat2::identity()));
}

TEST_CASE("projective distance vanishes exactly on scalar multiples") {
  Rng rng(kDefaultSeed + 4);
  for (int i = 0; i < 20; ++i) {
    Mat2 a = sample_invertible(rng);
    CHECK(projective_distance(Complex(0.3, -2.0) * a, a) <= 1e-12);
    CHECK(projective_distance(a, a) <= 1e-15);
  }
  CHECK(projective_distance(Mat2::diag(1.0, 2.0), Mat2::diag(2.0, 1.0)) > 0.1);
}

TEST_CASE("matrix nth roots") {
  CHECK(close(nth_root_matrix(Mat2::diag(4.0, 9.0), 2), Mat2::diag(2.0, 3.0)));
  CHECK(close(nth_root_matrix(Mat2{1.0, 1.0, 0.0, 1.0}, 2), Mat2{1.0, 0.5, 0.0, 1.0}));
  Rng rng(kDefaultSeed + 5);
  for (int i = 0; i < 30; ++i) {
    Mat2 p = sample_invertible(rng);
    for (int n = 2; n <= 4; ++n) {
      Mat2 root = nth_root_matrix(p, n);
      CHECK(rel_err(root.pow(n), p) <= 1e-9);
    }
  }
  // scalar and Jordan branches
  CHECK(close(nth_root_matrix(Mat2::diag(9.0, 9.0), 2), Mat2::diag(3.0, 3.0)));
  Mat2 shear{4.0, 4.0, 0.0, 4.0};
  CHECK(rel_err(nth_root_matrix(shear, 2).pow(2), shear) <= 1e-12);
}

TEST_CASE("complex literal parsing") {
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex("-1") == Complex(-1.0, 0.0));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2+3i") == Complex(2.0, 3.0));
  CHECK(parse_complex("0.5-0.25i") == Complex(0.5, -0.25));
  CHECK(parse_complex("1e-3+2i") == Complex(1e-3, 2.0));
  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
}

TEST_CASE("samples stay in their class and in the unit-square family") {
  ClassLabel cls = ClassLabel::diag_pair(2.0, 3.0);
  Rng rng(kDefaultSeed + 6);
  for (int i = 0; i < 50; ++i) {
    Mat2 m = sample_in_class(cls, rng);
    CHECK(cls.contains(m, 1e-9));
  }
}
