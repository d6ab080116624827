#ifndef QF_ANALYSIS_HPP
#define QF_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qf/quandle.hpp"

namespace qf {

enum class LatinMode {
  Fast,    // checks bijectivity of L_0 only; equivalent to Oracle on quandles
  Oracle,  // checks every left translation
};

bool is_latin(const QuandleTable& t, LatinMode mode);

struct OrbitInfo {
  std::vector<std::vector<int>> blocks;  // sorted blocks, ordered by least element
  int abelianization_rank;               // = number of blocks
  std::vector<int> block_of;             // element -> block index
};

/// Orbits of the group generated by all right translations and their
/// inverses, via union-find closure under x ~ x*y.
OrbitInfo orbits(const QuandleTable& t);

struct ConnectivityReport {
  bool connected = false;
  std::optional<int> degree;                       // present iff connected
  std::optional<std::pair<int, int>> witness_pair; // ordered pair attaining degree
};

/// Degree = max over ordered pairs (x,y) of the least l >= 1 with
/// y = x*z_1*...*z_l; computed by BFS over right translations in index
/// order, ties broken by the lexicographically least pair.
ConnectivityReport connectivity_degree(const QuandleTable& t);

/// Least n with R_y^n = id for every y (the lcm of the translation orders).
int type_of(const QuandleTable& t);

struct IsoResult {
  enum class Outcome { Found, NotFound, Inconclusive };
  Outcome outcome = Outcome::NotFound;
  std::vector<int> mapping;  // element of the first table -> element of the second
  std::uint64_t nodes_explored = 0;
  bool found() const { return outcome == Outcome::Found; }
  bool inconclusive() const { return outcome == Outcome::Inconclusive; }
};

/// Backtracking isomorphism search with invariant-profile pruning; images
/// are tried in ascending profile rarity. NotFound is definitive; budget
/// exhaustion yields Inconclusive, never NotFound.
IsoResult find_isomorphism(const QuandleTable& a, const QuandleTable& b,
                           std::uint64_t budget = 1u << 22);

/// Injective homomorphism search (subquandle embedding), same conventions.
IsoResult embed(const QuandleTable& p, const QuandleTable& q,
                std::uint64_t budget = 1u << 22);

}  // namespace qf

#endif
