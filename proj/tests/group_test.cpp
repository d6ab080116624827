#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qf/analysis.hpp"
#include "qf/errors.hpp"
#include "qf/group.hpp"
#include "qf/quandle.hpp"

using namespace qf;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("cyclic group is addition mod n") {
  GroupTable g = build_group(CyclicG{3});
  CHECK(g.size() == 3);
  CHECK(g.identity() == 0);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(g.mul(x, y) == (x + y) % 3);
}

TEST_CASE("symmetric group sizes and lexicographic enumeration") {
  GroupTable s3 = build_group(SymmetricG{3});
  CHECK(s3.size() == 6);
  // element 1 is the transposition [0,2,1]; it squares to the identity
  CHECK(s3.mul(1, 1) == 0);
  CHECK(build_group(SymmetricG{4}).size() == 24);
  CHECK_THROWS_AS(build_group(SymmetricG{6}), std::invalid_argument);
}

TEST_CASE("dihedral group of the square has two central elements") {
  GroupTable g = build_group(DihedralG{4});
  CHECK(g.size() == 8);
  int central = 0;
  for (int x = 0; x < g.size(); ++x) {
    bool commutes = true;
    for (int y = 0; y < g.size(); ++y) {
      if (g.mul(x, y) != g.mul(y, x)) commutes = false;
    }
    central += commutes;
  }
  CHECK(central == 2);
}

TEST_CASE("conjugacy class sizes") {
  auto sizes = [](const GroupTable& g) {
    std::vector<std::size_t> s;
    for (const auto& block : conjugacy_classes(g)) s.push_back(block.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sizes(build_group(SymmetricG{3})) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sizes(build_group(CyclicG{5})) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(sizes(build_group(DihedralG{4})) == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("group powers, including negative exponents") {
  GroupTable g = build_group(CyclicG{5});
  CHECK(g.power(2, 3) == 1);   // 6 mod 5
  CHECK(g.power(2, -1) == 3);  // inverse of 2
  CHECK(g.power(2, 0) == 0);
}

TEST_CASE("group table file round trip and header") {
  GroupTable g = build_group(DihedralG{3});
  auto path = write_temp("qf_group_roundtrip.txt", serialize_group(g));
  GroupTable loaded = load_group_table(path);
  CHECK(loaded.size() == g.size());
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) CHECK(loaded.mul(x, y) == g.mul(x, y));
  CHECK(serialize_group(loaded) == serialize_group(g));
}

TEST_CASE("non-group files are rejected with the failed law") {
  // identity law broken: row 0 is not the identity row
  auto bad_identity = write_temp("qf_group_bad_id.txt", "2\nidentity 0\n1 0\n0 1\n");
  CHECK_THROWS_WITH_AS(load_group_table(bad_identity),
                       doctest::Contains("identity"), GroupLawError);

  // associativity broken (a quasigroup that is not a group)
  auto bad_assoc = write_temp("qf_group_bad_assoc.txt",
                              "5\nidentity 0\n"
                              "0 1 2 3 4\n"
                              "1 0 3 4 2\n"
                              "2 4 0 1 3\n"
                              "3 2 4 0 1\n"
                              "4 3 1 2 0\n");
  CHECK_THROWS_AS(load_group_table(bad_assoc), GroupLawError);

  auto truncated = write_temp("qf_group_truncated.txt", "2\nidentity 0\n0 1\n");
  CHECK_THROWS_AS(load_group_table(truncated), ParseError);
}

TEST_CASE("conjugation quandle columns are the inner automorphisms") {
  GroupTable g = build_group(SymmetricG{3});
  QuandleTable t = build(ConjQ{SymmetricG{3}, 1});
  for (int y = 0; y < g.size(); ++y) {
    for (int x = 0; x < g.size(); ++x) {
      CHECK(t.op(x, y) == g.mul(g.mul(g.inverse(y), x), y));
    }
  }
}

TEST_CASE("conjugacy classes match the orbit decomposition of the conjugation quandle") {
  const GroupSpec specs[] = {GroupSpec{CyclicG{6}}, GroupSpec{DihedralG{4}},
                             GroupSpec{SymmetricG{3}}, GroupSpec{SymmetricG{4}}};
  for (const auto& spec : specs) {
    GroupTable g = build_group(spec);
    auto classes = conjugacy_classes(g);
    auto blocks = orbits(build(ConjQ{spec, 1})).blocks;
    CHECK(classes == blocks);
  }
}
