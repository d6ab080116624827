#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qf/catalog.hpp"
#include "qf/errors.hpp"
#include "qf/quandle.hpp"
#include "qf/rng.hpp"

using namespace qf;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

QuandleTable with_entry(const QuandleTable& t, int x, int y, int value) {
  std::vector<int> op;
  op.reserve(static_cast<std::size_t>(t.size()) * t.size());
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) op.push_back(t.op(i, j));
  op[static_cast<std::size_t>(x) * t.size() + y] = value;
  return QuandleTable(t.size(), std::move(op), t.name() + "/mutated");
}

}  // namespace

TEST_CASE("dihedral construction follows 2j - i mod n") {
  QuandleTable t = build(DihedralQ{3});
  CHECK(t.op(0, 0) == 0);
  CHECK(t.op(0, 1) == 2);
  CHECK(t.op(0, 2) == 1);
}

TEST_CASE("trivial quandle has constant rows") {
  QuandleTable t = build(TrivialQ{4});
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(t.op(x, y) == x);
}

TEST_CASE("core of a cyclic group is the dihedral quandle") {
  CHECK(build(CoreQ{CyclicG{4}}).same_table(build(DihedralQ{4})));
  CHECK(build(CoreQ{CyclicG{7}}).same_table(build(DihedralQ{7})));
}

TEST_CASE("validate accepts quandles and pinpoints broken axioms") {
  CHECK(validate(build(DihedralQ{3})).ok());

  QuandleTable q1_broken = with_entry(build(TrivialQ{2}), 0, 0, 1);
  AxiomReport r1 = validate(q1_broken);
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violations.front().axiom == 1);
  CHECK(r1.violations.front().x == 0);

  QuandleTable q2_broken = with_entry(build(DihedralQ{3}), 0, 1, 0);
  AxiomReport r2 = validate(q2_broken);
  REQUIRE_FALSE(r2.ok());
  bool q2_in_column_1 = false;
  for (const auto& v : r2.violations) {
    if (v.axiom == 2 && v.z == 1) q2_in_column_1 = true;
  }
  CHECK(q2_in_column_1);
}

TEST_CASE("out-of-range entries are a structural error, reported before axioms") {
  QuandleTable broken = with_entry(build(TrivialQ{2}), 0, 1, 7);
  AxiomReport report = validate(broken);
  REQUIRE(report.structural_error.has_value());
  CHECK(report.violations.empty());
}

TEST_CASE("violation witnesses are capped per axiom") {
  const int n = 20;
  // x*y = y: constant columns, so Q2 fails in every column
  std::vector<int> right_proj;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) right_proj.push_back(y);
  AxiomReport r2 = validate(QuandleTable(n, std::move(right_proj)));
  int q2 = 0;
  for (const auto& v : r2.violations) q2 += v.axiom == 2;
  REQUIRE_FALSE(r2.ok());
  CHECK(q2 == AxiomReport::kMaxWitnessesPerAxiom);

  // x*y = x+1: every diagonal entry is off, so Q1 fails everywhere
  std::vector<int> shift;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) shift.push_back((x + 1) % n);
  AxiomReport r1 = validate(QuandleTable(n, std::move(shift)));
  int q1 = 0;
  for (const auto& v : r1.violations) q1 += v.axiom == 1;
  CHECK(q1 == AxiomReport::kMaxWitnessesPerAxiom);
}

TEST_CASE("dual tables") {
  CHECK(dual(build(DihedralQ{5})).same_table(build(DihedralQ{5})));
  CHECK(dual(build(TrivialQ{3})).same_table(build(TrivialQ{3})));

  QuandleTable t = build(ConjQ{SymmetricG{3}, 1});
  QuandleTable d = dual(t);
  // each column of the dual is the inverse permutation of the same column
  for (int y = 0; y < t.size(); ++y) {
    for (int x = 0; x < t.size(); ++x) CHECK(d.op(t.op(x, y), y) == x);
  }
  CHECK(dual(d).same_table(t));
}

TEST_CASE("iterate: identity at n=1, flattening at the type") {
  QuandleTable r3 = build(DihedralQ{3});
  CHECK(iterate(r3, 1).same_table(r3));
  CHECK(iterate(r3, 2).same_table(build(TrivialQ{3})));
  CHECK(iterate(build(ConjQ{SymmetricG{3}, 1}), 6).same_table(build(TrivialQ{6})));
}

TEST_CASE("iterate composes additively in the exponent") {
  const QuandleTable tables[] = {build(DihedralQ{6}), build(ConjQ{SymmetricG{3}, 1})};
  for (const auto& t : tables) {
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        QuandleTable lhs = iterate(t, a + b);
        QuandleTable ta = iterate(t, a);
        QuandleTable tb = iterate(t, b);
        for (int x = 0; x < t.size(); ++x)
          for (int y = 0; y < t.size(); ++y)
            CHECK(lhs.op(x, y) == ta.op(tb.op(x, y), y));
      }
    }
  }
}

TEST_CASE("translations") {
  Translations tr = translations(build(DihedralQ{3}), 0);
  CHECK(tr.right.image() == std::vector<int>{0, 2, 1});
  CHECK(tr.right(0) == 0);  // fixes y

  Translations tv = translations(build(TrivialQ{5}), 2);
  CHECK(tv.right.is_identity());

  Translations t4 = translations(build(DihedralQ{4}), 0);
  CHECK(t4.left == std::vector<int>{0, 2, 0, 2});  // not injective
}

TEST_CASE("right translation fixes its element across the catalog") {
  for (const auto& t : standard_catalog()) {
    for (int y = 0; y < t.size(); ++y) {
      CHECK(t.op(y, y) == y);
      CHECK(t.dual_op(y, y) == y);  // x *^{-1} x = x
    }
  }
}

TEST_CASE("every constructed catalog table passes validate") {
  for (const auto& t : catalog_with_iterates(4)) {
    CAPTURE(t.name());
    CHECK(validate(t).ok());
    CHECK(dual(dual(t)).same_table(t));
  }
}

TEST_CASE("large conjugation quandle: exhaustive small axioms, sampled distributivity") {
  QuandleTable t = build(ConjQ{SymmetricG{5}, 1});  // 120 elements
  REQUIRE(t.size() == 120);
  for (int x = 0; x < t.size(); ++x) CHECK(t.op(x, x) == x);
  CHECK(t.right_invertible());
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 100000; ++i) {
    int x = static_cast<int>(rng.next_u64() % 120);
    int y = static_cast<int>(rng.next_u64() % 120);
    int z = static_cast<int>(rng.next_u64() % 120);
    if (t.op(t.op(x, y), z) != t.op(t.op(x, z), t.op(y, z))) {
      FAIL("distributivity fails at sampled triple");
    }
  }
}

TEST_CASE("negative conjugation exponents use inverse powers") {
  QuandleTable plus = build(ConjQ{SymmetricG{3}, 1});
  QuandleTable minus = build(ConjQ{SymmetricG{3}, -1});
  CHECK(minus.same_table(dual(plus)));
  CHECK(validate(build(ConjQ{DihedralG{4}, -2})).ok());
}

TEST_CASE("table file parsing, comments and round trip") {
  auto path = write_temp("qf_quandle_roundtrip.txt",
                         "# comment line\n3\n0 2 1   # row 0\n2 1 0\n1 0 2\n");
  QuandleTable t = load_quandle_table(path);
  CHECK(t.same_table(build(DihedralQ{3})));
  CHECK(serialize_quandle(t) == "3\n0 2 1\n2 1 0\n1 0 2\n");

  // byte-exact round trip of the canonical form
  auto canonical = write_temp("qf_quandle_canonical.txt", serialize_quandle(t));
  CHECK(serialize_quandle(load_quandle_table(canonical)) == serialize_quandle(t));
}

TEST_CASE("malformed table files carry the offending location") {
  auto path = write_temp("qf_quandle_bad.txt", "3\n0 2 1\n2 x 0\n1 0 2\n");
  try {
    load_quandle_table(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 2);
  }
  CHECK_THROWS_AS(load_quandle_table(write_temp("qf_quandle_eof.txt", "3\n0 2 1\n")), ParseError);
  CHECK_THROWS_AS(load_quandle_table("/nonexistent/qf.txt"), ParseError);
}

TEST_CASE("spec strings parse and name round-trip") {
  CHECK(build(parse_quandle_spec("dihedral:3")).same_table(build(DihedralQ{3})));
  CHECK(build(parse_quandle_spec("conj:sym:3:1")).same_table(build(ConjQ{SymmetricG{3}, 1})));
  CHECK(build(parse_quandle_spec("conj:sym:3")).same_table(build(ConjQ{SymmetricG{3}, 1})));
  CHECK(build(parse_quandle_spec("conj:cyclic:5:-1")).same_table(build(ConjQ{CyclicG{5}, -1})));
  CHECK(build(parse_quandle_spec("core:dihgroup:4")).same_table(build(CoreQ{DihedralG{4}})));
  CHECK(quandle_spec_name(parse_quandle_spec("trivial:9")) == "trivial:9");
  CHECK_THROWS_AS(parse_quandle_spec("septagonal:3"), std::invalid_argument);
}
