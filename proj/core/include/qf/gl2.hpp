#ifndef QF_GL2_HPP
#define QF_GL2_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/mat2.hpp"

namespace qf {

/// Outcome of a constructive verification. Witness reports re-verify by
/// direct multiplication before they are returned; NoWitness/Refuted carry
/// the violated necessary condition in `refutation`, and `exact_checked` is
/// set when that condition was re-derived in exact Gaussian-rational
/// arithmetic (possible whenever the inputs are Gaussian-rational).
struct WitnessReport {
  enum class Status { Witness, NoWitness, Refuted, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<Mat2> matrices;
  double residual = 0.0;
  std::string refutation;
  std::vector<std::pair<std::string, Complex>> solver_values;
  bool exact_checked = false;

  bool is_witness() const { return status == Status::Witness; }
};

std::string to_string(WitnessReport::Status s);

/// Basis of the solution space {X : aX = Xb}, dimension 0..4. Basis
/// matrices are scaled so their largest-modulus entry is 1.
struct ConjugatorSpace {
  int dim = 0;
  std::vector<Mat2> basis;
};
ConjugatorSpace conjugator_space(const Mat2& a, const Mat2& b);

/// Searches for X in the class `cls` with a*X = X^{-1} a X = target.
/// X is parametrized over {X : aX = X target}; the class trace gives a
/// linear constraint and the class determinant a quadratic one on the
/// free coefficients (recorded as solver values u, v). Throws when a and
/// target are not conjugate.
WitnessReport witness_in_class(const Mat2& a, const Mat2& target, const ClassLabel& cls,
                               double tol = kDefaultTol);

/// Path of length 1 or 2 from the class base point to `a`, with conjugators
/// inside the class. Length 1 is attempted first; when it is refuted the
/// refutation is kept in the report alongside the 2-step witness pair.
WitnessReport two_step_path(const ClassLabel& cls, const Mat2& a, double tol = kDefaultTol);

struct SubquandleOrderReport {
  bool predicted = false;  // (lam1/lam2)^n == 1
  bool ok = false;         // every sample agreed with the prediction
  int samples = 0;
  double max_pass_residual = 0.0;
  std::optional<std::pair<Mat2, Mat2>> counterexample;  // explicit pair when !predicted
  double counterexample_deviation = 0.0;
};

/// Checks whether x *^n y = x holds throughout a diagonalizable class:
/// predicted by the eigenvalue ratio being an n-th root of unity, verified
/// on seeded random pairs, with the explicit upper-triangular/diagonal
/// counterexample when the prediction is negative.
SubquandleOrderReport subquandle_order_test(const ClassLabel& cls, int n, int samples,
                                            std::uint64_t seed, double tol = kDefaultTol);

struct JordanTypeProbe {
  Mat2 result;
  Mat2 closed_form;
  double residual = 0.0;        // |result - closed_form|, relative
  bool matches_closed_form = false;
  bool differs_from_base = false;
};

/// Applies x -> x *_n P m times to [[lam,1],[0,lam]] with P = [[lam,0],[1,lam]]
/// and compares against the closed form [[lam+nm/lam, 1], [-(nm/lam)^2, lam-nm/lam]].
JordanTypeProbe jordan_type_probe(Complex lam, int n, int m, double tol = kDefaultTol);

struct PglTrivialComponentReport {
  int verified = 0;  // classes of D(1, e^{2 pi i k/n}) verified trivial under *_n
  int expected = 0;  // n
  bool control_failed = false;  // the non-root-ratio control must fail
  double control_deviation = 0.0;
  double max_residual = 0.0;
  bool ok() const { return verified == expected && control_failed; }
};

PglTrivialComponentReport count_trivial_components_pgl(int n, int samples,
                                                       std::uint64_t seed,
                                                       double tol = kDefaultTol);

/// Three-element dihedral subquandle probe. For classes with lam1 = -lam2 it
/// returns the verified triple {D(lam,-lam), lam*[[-1/2,b],[c,1/2]],
/// lam*[[-1/2,-b],[-c,1/2]]} with b*c = 3/4 (all nine products checked);
/// otherwise it refutes with the violated necessary condition.
WitnessReport r3_probe(const ClassLabel& cls, double tol = kDefaultTol);

/// Builds A, B in M_{lam1, lam2} with AB != BA and D*A*B = D. Parameter
/// values follow the closed-form construction (free split f = 1); excluded
/// parameter ranges are solved in a scaled class M_{k lam1, k lam2} and the
/// witnesses mapped back through A -> A/k.
WitnessReport noncommuting_return_pair(Complex lam1, Complex lam2, double tol = kDefaultTol);

struct TrivialPairReport {
  bool pair_trivial = false;     // the two diagonals fix each other
  int commutant_dim = 0;         // dimension of {X : DX = XD}, expect 2
  bool commutant_diagonal = false;
  bool only_two_in_class = false;  // commutant members in the class = the two diagonals
  int samples_checked = 0;
  bool ok() const {
    return pair_trivial && commutant_dim == 2 && commutant_diagonal && only_two_in_class;
  }
};

/// Checks that {D(lam1,lam2), D(lam2,lam1)} is a trivial pair and that no
/// third pairwise-commuting class member exists.
TrivialPairReport max_trivial_pair_check(Complex lam1, Complex lam2, int samples,
                                         std::uint64_t seed, double tol = kDefaultTol);

/// Transport check for class powers: conjugating by P agrees with
/// conjugating n times by an n-th root of P.
struct RootTransportReport {
  double residual = 0.0;
  bool ok = false;
};
RootTransportReport class_power_transport(const Mat2& p, const Mat2& a, int n,
                                          double tol = kDefaultTol);

}  // namespace qf

#endif
