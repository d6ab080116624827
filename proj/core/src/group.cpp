#include "qf/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qf/detail/parse_util.hpp"

namespace qf {

GroupLawError::GroupLawError(std::string law_, int x_, int y_, int z_,
                             const std::string& what_)
    : std::runtime_error(what_), law(std::move(law_)), x(x_), y(y_), z(z_) {}

namespace {

void check_group_laws(int n, const std::vector<int>& mul, int identity,
                      std::vector<int>& inv_out) {
  auto at = [&](int x, int y) { return mul[static_cast<std::size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int v = at(x, y);
      if (v < 0 || v >= n) {
        throw GroupLawError("closure", x, y, -1,
                            "entry out of range at (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
      }
    }
  }
  if (identity < 0 || identity >= n) {
    throw GroupLawError("identity", identity, -1, -1, "identity index out of range");
  }
  for (int x = 0; x < n; ++x) {
    if (at(identity, x) != x || at(x, identity) != x) {
      throw GroupLawError("identity", x, -1, -1,
                          "identity law fails at x=" + std::to_string(x));
    }
  }
  inv_out.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (at(x, y) == identity && at(y, x) == identity) {
        inv_out[x] = y;
        break;
      }
    }
    if (inv_out[x] < 0) {
      throw GroupLawError("inverse", x, -1, -1,
                          "no two-sided inverse for x=" + std::to_string(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (at(at(x, y), z) != at(x, at(y, z))) {
          throw GroupLawError(
              "associativity", x, y, z,
              "associativity fails at (" + std::to_string(x) + "," +
                  std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
}

}  // namespace

GroupTable::GroupTable(int size, std::vector<int> mul_row_major, int identity,
                       std::string name)
    : n_(size), mul_(std::move(mul_row_major)), identity_(identity), name_(std::move(name)) {
  if (n_ < 1 || mul_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("group table size mismatch");
  }
  check_group_laws(n_, mul_, identity_, inv_);
}

int GroupTable::power(int x, long long k) const {
  int base = k >= 0 ? x : inv_[x];
  if (k < 0) k = -k;
  int acc = identity_;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

namespace {

GroupTable build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  return GroupTable(n, std::move(mul), 0, "cyclic:" + std::to_string(n));
}

// Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i.
GroupTable build_dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral group parameter must be >= 1");
  const int sz = 2 * n;
  auto compose = [n](int x, int y) {
    bool xr = x >= n, yr = y >= n;
    int xi = x % n, yi = y % n;
    if (!xr && !yr) return (xi + yi) % n;
    if (!xr && yr) return n + (yi - xi + n) % n;
    if (xr && !yr) return n + (xi + yi) % n;
    return (yi - xi + n) % n;
  };
  std::vector<int> mul(static_cast<std::size_t>(sz) * sz);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) mul[static_cast<std::size_t>(x) * sz + y] = compose(x, y);
  return GroupTable(sz, std::move(mul), 0, "dihgroup:" + std::to_string(n));
}

GroupTable build_symmetric(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric group parameter must be in 1..5");
  // Elements are permutations of {0..n-1} enumerated in lexicographic order
  // of their image tuples.
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int sz = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> mul(static_cast<std::size_t>(sz) * sz);
  std::vector<int> composed(n);
  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      // (x*y)(i) = y(x(i)): apply x first, then y.
      for (int i = 0; i < n; ++i) composed[i] = perms[y][perms[x][i]];
      mul[static_cast<std::size_t>(x) * sz + y] = index_of(composed);
    }
  }
  return GroupTable(sz, std::move(mul), 0, "sym:" + std::to_string(n));
}

}  // namespace

GroupTable build_group(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> GroupTable {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicG>) return build_cyclic(s.n);
        if constexpr (std::is_same_v<T, DihedralG>) return build_dihedral_group(s.n);
        if constexpr (std::is_same_v<T, SymmetricG>) return build_symmetric(s.n);
        if constexpr (std::is_same_v<T, GroupFileG>) return load_group_table(s.path);
      },
      spec);
}

std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
  const int n = g.size();
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> block;
    for (int y = 0; y < n; ++y) {
      int conj = g.mul(g.mul(g.inverse(y), x), y);
      if (!seen[conj]) {
        seen[conj] = 1;
        block.push_back(conj);
      }
    }
    std::sort(block.begin(), block.end());
    classes.push_back(std::move(block));
  }
  return classes;
}

GroupTable load_group_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  detail::TokenReader reader(in, path.string());
  const int n = reader.next_int("group order");
  std::string kw = reader.next_token("'identity' keyword");
  if (kw != "identity") {
    throw ParseError(path.string(), reader.line(), reader.column(),
                     "expected 'identity <k>' header, got '" + kw + "'");
  }
  const int identity = reader.next_int("identity index");
  std::vector<int> mul;
  mul.reserve(static_cast<std::size_t>(n) * n);
  for (long i = 0; i < static_cast<long>(n) * n; ++i) mul.push_back(reader.next_int("table entry"));
  return GroupTable(n, std::move(mul), identity, "gtable:" + path.string());
}

std::string serialize_group(const GroupTable& g) {
  std::ostringstream out;
  out << g.size() << "\n";
  out << "identity " << g.identity() << "\n";
  for (int x = 0; x < g.size(); ++x) {
    for (int y = 0; y < g.size(); ++y) {
      if (y) out << ' ';
      out << g.mul(x, y);
    }
    out << "\n";
  }
  return out.str();
}

GroupSpec parse_group_spec(std::string_view text) {
  if (auto rest = detail::strip_prefix(text, "cyclic:")) return CyclicG{detail::parse_int(*rest)};
  if (auto rest = detail::strip_prefix(text, "dihgroup:")) return DihedralG{detail::parse_int(*rest)};
  if (auto rest = detail::strip_prefix(text, "sym:")) return SymmetricG{detail::parse_int(*rest)};
  if (auto rest = detail::strip_prefix(text, "gtable:")) return GroupFileG{std::string(*rest)};
  throw std::invalid_argument("unknown group spec: '" + std::string(text) +
                              "' (expected cyclic:N, dihgroup:N, sym:N or gtable:PATH)");
}

std::string group_spec_name(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicG>) return "cyclic:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, DihedralG>) return "dihgroup:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, SymmetricG>) return "sym:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, GroupFileG>) return "gtable:" + s.path;
      },
      spec);
}

}  // namespace qf
