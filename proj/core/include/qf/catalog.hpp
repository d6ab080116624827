#ifndef QF_CATALOG_HPP
#define QF_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qf/quandle.hpp"
#include "qf/rng.hpp"
#include "qf/serialize.hpp"

namespace qf {

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  int samples = 200;
  std::string format = "json";  // json | csv | text
  std::string out;              // empty = stdout
};

/// The desk-scale catalog: dihedral quandles of order 1..24, Conj and Core
/// quandles of cyclic groups up to order 12, of dihedral groups up to
/// parameter 6 and of the symmetric groups on 3 and 4 letters.
std::vector<QuandleTable> standard_catalog();

/// The catalog together with its *_n iterates for 2 <= n <= max_n.
std::vector<QuandleTable> catalog_with_iterates(int max_n = 4);

namespace oracle {

/// Definition-level connectivity: reachability layers S_{k+1} = S_k * Q,
/// independent of the BFS in analysis.
struct BruteConnectivity {
  bool connected;
  int degree;  // meaningful only when connected
};
BruteConnectivity brute_connectivity(const QuandleTable& t);

/// Rank of the free part of the abelianized associated group, via integer
/// row reduction of the relation matrix with rows e_{x*y} - e_x.
int smith_abelianization_rank(const QuandleTable& t);

/// Direct latin test: every row is a permutation.
bool naive_latin(const QuandleTable& t);

}  // namespace oracle

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string details;
};

/// Runs all acceptance criteria. Each criterion pins its own sample counts
/// and tolerances; `config` supplies the seed, the default tolerance and the
/// sample count only where a criterion does not pin them.
std::vector<CriterionResult> run_acceptance(const RunConfig& config);

Json acceptance_report_json(const RunConfig& config, const std::vector<CriterionResult>& results);

}  // namespace qf

#endif
