#include "qf/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qf {

namespace {

bool row_is_permutation(const QuandleTable& t, int x) {
  std::vector<char> seen(t.size(), 0);
  for (int y = 0; y < t.size(); ++y) {
    int v = t.op(x, y);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

bool is_latin(const QuandleTable& t, LatinMode mode) {
  if (mode == LatinMode::Fast) return row_is_permutation(t, 0);
  for (int x = 0; x < t.size(); ++x) {
    if (!row_is_permutation(t, x)) return false;
  }
  return true;
}

OrbitInfo orbits(const QuandleTable& t) {
  const int n = t.size();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) uf.unite(x, t.op(x, y));
  std::vector<int> root_to_block(n, -1);
  OrbitInfo info;
  info.block_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (root_to_block[r] < 0) {
      root_to_block[r] = static_cast<int>(info.blocks.size());
      info.blocks.emplace_back();
    }
    info.block_of[x] = root_to_block[r];
    info.blocks[root_to_block[r]].push_back(x);
  }
  info.abelianization_rank = static_cast<int>(info.blocks.size());
  return info;
}

ConnectivityReport connectivity_degree(const QuandleTable& t) {
  const int n = t.size();
  ConnectivityReport report;
  OrbitInfo orbit_info = orbits(t);
  if (orbit_info.blocks.size() > 1) return report;  // disconnected
  report.connected = true;

  int best = 0;
  std::pair<int, int> best_pair{0, 0};
  std::vector<int> dist(n);
  std::vector<int> frontier, next;
  for (int x = 0; x < n; ++x) {
    // dist(x,y) = least word length from x to y; dist(x,x) = 1 via x*x.
    std::fill(dist.begin(), dist.end(), -1);
    dist[x] = 0;
    frontier.assign(1, x);
    int level = 0;
    while (!frontier.empty()) {
      ++level;
      next.clear();
      for (int u : frontier) {
        for (int z = 0; z < n; ++z) {
          int v = t.op(u, z);
          if (dist[v] < 0) {
            dist[v] = level;
            next.push_back(v);
          }
        }
      }
      std::swap(frontier, next);
    }
    for (int y = 0; y < n; ++y) {
      int d = (y == x) ? 1 : dist[y];
      if (d > best) {
        best = d;
        best_pair = {x, y};
      }
    }
  }
  report.degree = best;
  report.witness_pair = best_pair;
  return report;
}

int type_of(const QuandleTable& t) {
  long long result = 1;
  for (int y = 0; y < t.size(); ++y) {
    result = std::lcm(result, translations(t, y).right.order());
    if (result > (1LL << 40)) throw std::overflow_error("quandle type overflow");
  }
  return static_cast<int>(result);
}

namespace {

// Per-element invariant profile: block size, R_x cycle type, R_x fixed
// points, and the multiset signature of the row (sorted multiplicities).
struct Profile {
  int block_size;
  std::vector<int> r_cycle_type;
  int r_fixed;
  std::vector<int> row_signature;
  auto operator<=>(const Profile&) const = default;
};

Profile profile_of(const QuandleTable& t, const OrbitInfo& info, int x) {
  Profile p;
  p.block_size = static_cast<int>(info.blocks[info.block_of[x]].size());
  std::vector<int> col(t.size());
  for (int u = 0; u < t.size(); ++u) col[u] = t.op(u, x);
  Permutation rx{col};
  p.r_cycle_type = rx.cycle_type();
  p.r_fixed = rx.fixed_point_count();
  std::vector<int> counts(t.size(), 0);
  for (int y = 0; y < t.size(); ++y) ++counts[t.op(x, y)];
  std::sort(counts.begin(), counts.end());
  p.row_signature = std::move(counts);
  return p;
}

struct SearchState {
  const QuandleTable& a;
  const QuandleTable& b;
  bool injective_only;  // embedding: drop the bijectivity/profile-equality pruning
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> mapping;       // a-element -> b-element or -1
  std::vector<char> used;         // b-element already an image
  std::vector<int> order;         // assignment order of a-elements
  std::vector<std::vector<int>> candidates;  // per a-element, allowed images
  bool out_of_budget = false;

  bool consistent(int x, int fx) {
    // check all products among assigned elements involving x
    for (int y = 0; y < a.size(); ++y) {
      int fy = (y == x) ? fx : mapping[y];
      if (fy < 0) continue;
      int xy = a.op(x, y);
      int fxy = (xy == x) ? fx : mapping[xy];
      if (fxy >= 0 && b.op(fx, fy) != fxy) return false;
      int yx = a.op(y, x);
      int fyx = (yx == x) ? fx : mapping[yx];
      if (fyx >= 0 && b.op(fy, fx) != fyx) return false;
    }
    return true;
  }

  bool dfs(std::size_t idx) {
    if (idx == order.size()) return true;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    int x = order[idx];
    for (int fx : candidates[x]) {
      if (used[fx]) continue;
      if (!consistent(x, fx)) continue;
      mapping[x] = fx;
      used[fx] = 1;
      if (dfs(idx + 1)) return true;
      if (out_of_budget) return false;
      mapping[x] = -1;
      used[fx] = 0;
    }
    return false;
  }
};

IsoResult structure_search(const QuandleTable& a, const QuandleTable& b,
                           std::uint64_t budget, bool injective_only) {
  IsoResult result;
  if (!injective_only && a.size() != b.size()) return result;
  if (a.size() > b.size()) return result;

  OrbitInfo ia = orbits(a), ib = orbits(b);
  std::vector<Profile> pa(a.size()), pb(b.size());
  for (int x = 0; x < a.size(); ++x) pa[x] = profile_of(a, ia, x);
  for (int x = 0; x < b.size(); ++x) pb[x] = profile_of(b, ib, x);

  std::map<Profile, int> rarity;  // profile -> count in b
  for (const auto& p : pb) ++rarity[p];

  SearchState state{a, b, injective_only, budget};
  state.mapping.assign(a.size(), -1);
  state.used.assign(b.size(), 0);
  state.candidates.resize(a.size());
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) {
      if (injective_only) {
        // sound pruning for embeddings: the translation order of the image
        // must be a multiple of the source's, and idempotency is free.
        long long oa = Permutation(
                           [&] {
                             std::vector<int> col(a.size());
                             for (int u = 0; u < a.size(); ++u) col[u] = a.op(u, x);
                             return col;
                           }())
                           .order();
        long long ob = Permutation(
                           [&] {
                             std::vector<int> col(b.size());
                             for (int u = 0; u < b.size(); ++u) col[u] = b.op(u, y);
                             return col;
                           }())
                           .order();
        if (ob % oa != 0) continue;
      } else {
        if (pa[x] != pb[y]) continue;
      }
      state.candidates[x].push_back(y);
    }
    if (state.candidates[x].empty()) {
      result.outcome = IsoResult::Outcome::NotFound;
      return result;
    }
    // try rare images first
    std::stable_sort(state.candidates[x].begin(), state.candidates[x].end(),
                     [&](int u, int v) { return rarity[pb[u]] < rarity[pb[v]]; });
  }

  state.order.resize(a.size());
  std::iota(state.order.begin(), state.order.end(), 0);
  std::stable_sort(state.order.begin(), state.order.end(), [&](int u, int v) {
    return state.candidates[u].size() < state.candidates[v].size();
  });

  bool found = state.dfs(0);
  result.nodes_explored = state.nodes;
  if (found) {
    // full verification before returning
    for (int x = 0; x < a.size(); ++x) {
      for (int y = 0; y < a.size(); ++y) {
        if (b.op(state.mapping[x], state.mapping[y]) != state.mapping[a.op(x, y)]) {
          throw std::logic_error("isomorphism search returned an invalid mapping");
        }
      }
    }
    result.outcome = IsoResult::Outcome::Found;
    result.mapping = state.mapping;
  } else {
    result.outcome = state.out_of_budget ? IsoResult::Outcome::Inconclusive
                                         : IsoResult::Outcome::NotFound;
  }
  return result;
}

}  // namespace

IsoResult find_isomorphism(const QuandleTable& a, const QuandleTable& b,
                           std::uint64_t budget) {
  return structure_search(a, b, budget, /*injective_only=*/false);
}

IsoResult embed(const QuandleTable& p, const QuandleTable& q, std::uint64_t budget) {
  if (p.size() > q.size()) throw std::invalid_argument("embed: first table is larger");
  return structure_search(p, q, budget, /*injective_only=*/true);
}

}  // namespace qf
