#ifndef QF_QUANDLE_HPP
#define QF_QUANDLE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qf/group.hpp"
#include "qf/permutation.hpp"

namespace qf {

/// Finite binary algebra given by an n-by-n operation table; row x, column y
/// holds x*y. Candidate tables need not satisfy the quandle axioms — run
/// validate() to find out. Immutable after construction and safe to share
/// across threads; every operation on tables is a pure function.
class QuandleTable {
 public:
  QuandleTable(int n, std::vector<int> op_row_major, std::string name = "");

  int size() const { return n_; }
  int op(int x, int y) const { return op_[static_cast<std::size_t>(x) * n_ + y]; }

  /// True when every column is a permutation, i.e. the dual operation exists.
  bool right_invertible() const { return !dual_.empty(); }
  /// x *^{-1} y. Throws std::logic_error when the table is not right-invertible.
  int dual_op(int x, int y) const;

  const std::string& name() const { return name_; }
  QuandleTable renamed(std::string name) const;

  /// Structural equality of size and table entries; names are ignored.
  bool same_table(const QuandleTable& other) const {
    return n_ == other.n_ && op_ == other.op_;
  }

 private:
  int n_;
  std::vector<int> op_;
  std::vector<int> dual_;  // empty when some column is not a permutation
  std::string name_;
};

struct AxiomViolation {
  int axiom;  // 1, 2 or 3
  int x, y, z;  // witness; unused slots are -1
};

struct AxiomReport {
  std::optional<std::string> structural_error;  // out-of-range entries etc.
  std::vector<AxiomViolation> violations;       // at most 16 witnesses per axiom
  bool ok() const { return !structural_error && violations.empty(); }
  static constexpr int kMaxWitnessesPerAxiom = 16;
};

/// Checks Q1 (idempotency), Q2 (columns are permutations) and Q3 (right
/// self-distributivity) exhaustively, in that order; structural errors
/// short-circuit the axiom checks. Empty report iff the table is a quandle.
AxiomReport validate(const QuandleTable& t);

struct TrivialQ {
  int n;
};
struct DihedralQ {
  int n;
};
struct ConjQ {
  GroupSpec group;
  int exponent = 1;  // any integer; negative uses inverse powers
};
struct CoreQ {
  GroupSpec group;
};
struct TableFileQ {
  std::string path;
};
using QuandleSpec = std::variant<TrivialQ, DihedralQ, ConjQ, CoreQ, TableFileQ>;

/// Constructs the table for a spec. Every constructed table passes validate;
/// construction from a file that is not a quandle still succeeds (validate
/// reports the violations), but malformed files raise ParseError.
QuandleTable build(const QuandleSpec& spec);

/// Table of the dual operation: dual(t).op(x,y) = z where t.op(z,y) = x.
QuandleTable dual(const QuandleTable& t);

/// Table of x *_n y = R_y^n(x), computed by repeated column composition.
QuandleTable iterate(const QuandleTable& t, int n);

struct Translations {
  Permutation right;       // R_y : x -> x*y
  std::vector<int> left;   // L_y : z -> y*z, not injective in general
};
Translations translations(const QuandleTable& t, int y);

/// File format: optional '#' comment lines, `n`, then n rows of n indices.
QuandleTable load_quandle_table(const std::filesystem::path& path);
/// Canonical text: single spaces, one row per line, trailing newline.
std::string serialize_quandle(const QuandleTable& t);

/// Spec strings: "trivial:N", "dihedral:N", "conj:GROUP[:EXP]", "core:GROUP",
/// "table:PATH" with GROUP as in parse_group_spec.
QuandleSpec parse_quandle_spec(std::string_view text);
std::string quandle_spec_name(const QuandleSpec& spec);

}  // namespace qf

#endif
