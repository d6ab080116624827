#include <doctest.h>

#include <algorithm>

#include "qf/analysis.hpp"
#include "qf/catalog.hpp"

using namespace qf;

TEST_CASE("latin detection on the named examples") {
  CHECK(is_latin(build(DihedralQ{3}), LatinMode::Fast));
  CHECK(is_latin(build(DihedralQ{3}), LatinMode::Oracle));
  CHECK_FALSE(is_latin(build(TrivialQ{2}), LatinMode::Fast));
  CHECK_FALSE(is_latin(build(TrivialQ{2}), LatinMode::Oracle));
  CHECK_FALSE(is_latin(build(DihedralQ{4}), LatinMode::Oracle));
}

TEST_CASE("one bijective left translation implies all of them") {
  for (const auto& t : standard_catalog()) {
    CAPTURE(t.name());
    // bijectivity of L_x is the same answer for every x
    bool first = true, expected = false;
    for (int x = 0; x < t.size(); ++x) {
      std::vector<char> seen(t.size(), 0);
      bool bijective = true;
      for (int y = 0; y < t.size(); ++y) {
        int v = t.op(x, y);
        if (seen[v]) bijective = false;
        seen[v] = 1;
      }
      if (first) {
        expected = bijective;
        first = false;
      } else {
        CHECK(bijective == expected);
      }
    }
    CHECK(is_latin(t, LatinMode::Fast) == is_latin(t, LatinMode::Oracle));
  }
}

TEST_CASE("orbit decomposition and abelianization rank") {
  OrbitInfo trivial = orbits(build(TrivialQ{4}));
  CHECK(trivial.blocks.size() == 4);
  CHECK(trivial.abelianization_rank == 4);

  OrbitInfo r3 = orbits(build(DihedralQ{3}));
  CHECK(r3.blocks.size() == 1);
  CHECK(r3.abelianization_rank == 1);

  OrbitInfo s3 = orbits(build(ConjQ{SymmetricG{3}, 1}));
  std::vector<std::size_t> sizes;
  for (const auto& b : s3.blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(s3.abelianization_rank == 3);
}

TEST_CASE("connectivity degree on the named examples") {
  ConnectivityReport r3 = connectivity_degree(build(DihedralQ{3}));
  CHECK(r3.connected);
  CHECK(r3.degree == 1);
  REQUIRE(r3.witness_pair.has_value());

  CHECK_FALSE(connectivity_degree(build(TrivialQ{2})).connected);
  CHECK_FALSE(connectivity_degree(build(DihedralQ{6})).connected);
}

TEST_CASE("connectivity matches the definition-level oracle on small tables") {
  for (const auto& t : standard_catalog()) {
    if (t.size() > 12) continue;
    CAPTURE(t.name());
    ConnectivityReport got = connectivity_degree(t);
    oracle::BruteConnectivity want = oracle::brute_connectivity(t);
    CHECK(got.connected == want.connected);
    if (got.connected) CHECK(got.degree.value() == want.degree);
  }
}

namespace {

// least l >= 1 with y = x*z_1*...*z_l, straight from the definition
int definition_distance(const QuandleTable& t, int x, int y) {
  std::vector<char> layer(t.size(), 0);
  layer[x] = 1;
  for (int step = 1; step <= t.size(); ++step) {
    std::vector<char> next(t.size(), 0);
    for (int s = 0; s < t.size(); ++s) {
      if (!layer[s]) continue;
      for (int z = 0; z < t.size(); ++z) next[t.op(s, z)] = 1;
    }
    if (next[y]) return step;
    layer = next;
  }
  return -1;
}

}  // namespace

TEST_CASE("witness pair attains the degree") {
  QuandleTable disconnected = build(ConjQ{SymmetricG{3}, 1});
  ConnectivityReport r = connectivity_degree(disconnected);
  CHECK_FALSE(r.connected);  // three conjugacy classes
  CHECK_FALSE(r.degree.has_value());

  for (const auto& t : standard_catalog()) {
    if (t.size() > 12) continue;
    ConnectivityReport report = connectivity_degree(t);
    if (!report.connected) continue;
    REQUIRE(report.witness_pair.has_value());
    auto [x, y] = *report.witness_pair;
    CHECK(definition_distance(t, x, y) == report.degree.value());
    CHECK(report.degree.value() >= 1);
  }
}

TEST_CASE("type of the named examples") {
  CHECK(type_of(build(DihedralQ{3})) == 2);
  CHECK(type_of(build(TrivialQ{7})) == 1);
  CHECK(type_of(build(ConjQ{SymmetricG{3}, 1})) == 6);
}

TEST_CASE("type is the least flattening exponent and gives table periodicity") {
  for (const auto& t : standard_catalog()) {
    if (t.size() > 12) continue;
    CAPTURE(t.name());
    int type = type_of(t);
    QuandleTable trivial = build(TrivialQ{t.size()});
    CHECK(iterate(t, type).same_table(trivial));
    for (int m = 1; m < type; ++m) CHECK_FALSE(iterate(t, m).same_table(trivial));
    for (int m = 1; m <= 3; ++m) CHECK(iterate(t, m).same_table(iterate(t, m + type)));
  }
}

TEST_CASE("isomorphism search on the named examples") {
  QuandleTable r3 = build(DihedralQ{3});

  IsoResult same = find_isomorphism(r3, iterate(r3, 3));
  CHECK(same.found());
  CHECK(iterate(r3, 3).same_table(r3));  // *_3 = * for a type-2 quandle

  CHECK_FALSE(find_isomorphism(r3, build(TrivialQ{3})).found());
  CHECK(find_isomorphism(iterate(r3, 2), build(TrivialQ{3})).found());
}

TEST_CASE("found mappings are verified isomorphisms") {
  QuandleTable a = build(CoreQ{DihedralG{3}});
  QuandleTable b = build(CoreQ{DihedralG{3}});
  IsoResult r = find_isomorphism(a, b);
  REQUIRE(r.found());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      CHECK(b.op(r.mapping[x], r.mapping[y]) == r.mapping[a.op(x, y)]);
}

TEST_CASE("isomorphism search is symmetric on catalog pairs") {
  const QuandleTable tables[] = {build(DihedralQ{4}), build(DihedralQ{6}),
                                 build(ConjQ{DihedralG{3}, 1}), build(CoreQ{CyclicG{6}}),
                                 build(TrivialQ{6})};
  for (const auto& a : tables) {
    for (const auto& b : tables) {
      if (a.size() != b.size()) continue;
      CHECK(find_isomorphism(a, b).found() == find_isomorphism(b, a).found());
    }
  }
}

TEST_CASE("budget exhaustion is inconclusive, not a refusal") {
  QuandleTable a = build(ConjQ{SymmetricG{4}, 1});
  IsoResult r = find_isomorphism(a, a, 3);
  CHECK(r.inconclusive());
  CHECK_FALSE(r.found());
  CHECK(r.nodes_explored >= 3);
}

TEST_CASE("embedding search on the named examples") {
  QuandleTable r3 = build(DihedralQ{3});

  IsoResult into_r6 = embed(r3, build(DihedralQ{6}));
  REQUIRE(into_r6.found());
  QuandleTable r6 = build(DihedralQ{6});
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK(r6.op(into_r6.mapping[x], into_r6.mapping[y]) == into_r6.mapping[r3.op(x, y)]);

  CHECK_FALSE(embed(r3, build(TrivialQ{5})).found());

  IsoResult pair = embed(build(TrivialQ{2}), build(DihedralQ{4}));
  CHECK(pair.found());
  CHECK(pair.mapping[0] != pair.mapping[1]);

  CHECK_THROWS_AS(embed(build(DihedralQ{6}), r3), std::invalid_argument);
}

TEST_CASE("abelianization rank equals the integer-elimination oracle") {
  for (const auto& t : standard_catalog()) {
    if (t.size() > 10) continue;
    CAPTURE(t.name());
    CHECK(orbits(t).abelianization_rank == oracle::smith_abelianization_rank(t));
  }
}

TEST_CASE("latin oracle helper agrees with the analysis module") {
  for (const auto& t : standard_catalog()) {
    CHECK(oracle::naive_latin(t) == is_latin(t, LatinMode::Oracle));
  }
}
