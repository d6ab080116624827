#include "qf/quandle.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qf/detail/parse_util.hpp"

namespace qf {

namespace {

// Inverse of every column, or empty if some column is not a permutation.
std::vector<int> column_inverses(int n, const std::vector<int>& op) {
  std::vector<int> dual(static_cast<std::size_t>(n) * n, -1);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      int v = op[static_cast<std::size_t>(x) * n + y];
      if (v < 0 || v >= n) return {};
      std::size_t slot = static_cast<std::size_t>(v) * n + y;
      if (dual[slot] != -1) return {};  // duplicate in column y
      dual[slot] = x;
    }
  }
  return dual;
}

}  // namespace

QuandleTable::QuandleTable(int n, std::vector<int> op_row_major, std::string name)
    : n_(n), op_(std::move(op_row_major)), name_(std::move(name)) {
  if (n_ < 1 || op_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("quandle table size mismatch");
  }
  dual_ = column_inverses(n_, op_);
}

int QuandleTable::dual_op(int x, int y) const {
  if (dual_.empty()) throw std::logic_error("table is not right-invertible");
  return dual_[static_cast<std::size_t>(x) * n_ + y];
}

QuandleTable QuandleTable::renamed(std::string name) const {
  QuandleTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

AxiomReport validate(const QuandleTable& t) {
  AxiomReport report;
  const int n = t.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int v = t.op(x, y);
      if (v < 0 || v >= n) {
        report.structural_error = "entry out of range at (" + std::to_string(x) + "," +
                                  std::to_string(y) + "): " + std::to_string(v);
        return report;
      }
    }
  }
  int q1 = 0, q2 = 0, q3 = 0;
  for (int x = 0; x < n && q1 < AxiomReport::kMaxWitnessesPerAxiom; ++x) {
    if (t.op(x, x) != x) {
      report.violations.push_back({1, x, x, -1});
      ++q1;
    }
  }
  for (int y = 0; y < n && q2 < AxiomReport::kMaxWitnessesPerAxiom; ++y) {
    std::vector<int> preimage(n, -1);
    for (int x = 0; x < n; ++x) {
      int v = t.op(x, y);
      if (preimage[v] != -1) {
        report.violations.push_back({2, preimage[v], x, y});
        if (++q2 >= AxiomReport::kMaxWitnessesPerAxiom) break;
      } else {
        preimage[v] = x;
      }
    }
  }
  for (int x = 0; x < n && q3 < AxiomReport::kMaxWitnessesPerAxiom; ++x) {
    for (int y = 0; y < n && q3 < AxiomReport::kMaxWitnessesPerAxiom; ++y) {
      for (int z = 0; z < n; ++z) {
        if (t.op(t.op(x, y), z) != t.op(t.op(x, z), t.op(y, z))) {
          report.violations.push_back({3, x, y, z});
          if (++q3 >= AxiomReport::kMaxWitnessesPerAxiom) break;
        }
      }
    }
  }
  return report;
}

namespace {

QuandleTable build_trivial(int n) {
  if (n < 1) throw std::invalid_argument("trivial quandle size must be >= 1");
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op[static_cast<std::size_t>(x) * n + y] = x;
  return QuandleTable(n, std::move(op), "trivial:" + std::to_string(n));
}

QuandleTable build_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral quandle size must be >= 1");
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[static_cast<std::size_t>(x) * n + y] = ((2 * y - x) % n + n) % n;
  return QuandleTable(n, std::move(op), "dihedral:" + std::to_string(n));
}

QuandleTable build_conj(const GroupSpec& gs, int exponent) {
  GroupTable g = build_group(gs);
  const int n = g.size();
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y) {
    int ym = g.power(y, exponent);
    int ym_inv = g.inverse(ym);
    for (int x = 0; x < n; ++x)
      op[static_cast<std::size_t>(x) * n + y] = g.mul(g.mul(ym_inv, x), ym);
  }
  return QuandleTable(n, std::move(op),
                      "conj:" + g.name() + ":" + std::to_string(exponent));
}

QuandleTable build_core(const GroupSpec& gs) {
  GroupTable g = build_group(gs);
  const int n = g.size();
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[static_cast<std::size_t>(x) * n + y] = g.mul(g.mul(y, g.inverse(x)), y);
  return QuandleTable(n, std::move(op), "core:" + g.name());
}

}  // namespace

QuandleTable build(const QuandleSpec& spec) {
  return std::visit(
      [](const auto& s) -> QuandleTable {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TrivialQ>) return build_trivial(s.n);
        if constexpr (std::is_same_v<T, DihedralQ>) return build_dihedral(s.n);
        if constexpr (std::is_same_v<T, ConjQ>) return build_conj(s.group, s.exponent);
        if constexpr (std::is_same_v<T, CoreQ>) return build_core(s.group);
        if constexpr (std::is_same_v<T, TableFileQ>) return load_quandle_table(s.path);
      },
      spec);
}

QuandleTable dual(const QuandleTable& t) {
  const int n = t.size();
  if (!t.right_invertible()) throw std::invalid_argument("dual: table is not right-invertible");
  std::vector<int> op(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op[static_cast<std::size_t>(x) * n + y] = t.dual_op(x, y);
  return QuandleTable(n, std::move(op), "dual(" + t.name() + ")");
}

QuandleTable iterate(const QuandleTable& t, int n) {
  if (n < 1) throw std::invalid_argument("iterate: n must be >= 1");
  const int sz = t.size();
  // column y of the result is R_y^n, built by composing R_y with itself
  // n-1 times; kept naive on purpose so it can serve as an oracle.
  std::vector<int> op(static_cast<std::size_t>(sz) * sz);
  for (int y = 0; y < sz; ++y) {
    for (int x = 0; x < sz; ++x) {
      int v = x;
      for (int k = 0; k < n; ++k) v = t.op(v, y);
      op[static_cast<std::size_t>(x) * sz + y] = v;
    }
  }
  return QuandleTable(sz, std::move(op), "q" + std::to_string(n) + "(" + t.name() + ")");
}

Translations translations(const QuandleTable& t, int y) {
  const int n = t.size();
  if (y < 0 || y >= n) throw std::invalid_argument("translations: element out of range");
  std::vector<int> right(n), left(n);
  for (int x = 0; x < n; ++x) right[x] = t.op(x, y);
  for (int z = 0; z < n; ++z) left[z] = t.op(y, z);
  return {Permutation(std::move(right)), std::move(left)};
}

QuandleTable load_quandle_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  detail::TokenReader reader(in, path.string());
  const int n = reader.next_int("table size");
  if (n < 1) throw ParseError(path.string(), reader.line(), reader.column(), "size must be >= 1");
  std::vector<int> op;
  op.reserve(static_cast<std::size_t>(n) * n);
  for (long i = 0; i < static_cast<long>(n) * n; ++i) op.push_back(reader.next_int("table entry"));
  return QuandleTable(n, std::move(op), "table:" + path.string());
}

std::string serialize_quandle(const QuandleTable& t) {
  std::ostringstream out;
  out << t.size() << "\n";
  for (int x = 0; x < t.size(); ++x) {
    for (int y = 0; y < t.size(); ++y) {
      if (y) out << ' ';
      out << t.op(x, y);
    }
    out << "\n";
  }
  return out.str();
}

QuandleSpec parse_quandle_spec(std::string_view text) {
  if (auto rest = detail::strip_prefix(text, "trivial:")) return TrivialQ{detail::parse_int(*rest)};
  if (auto rest = detail::strip_prefix(text, "dihedral:")) return DihedralQ{detail::parse_int(*rest)};
  if (auto rest = detail::strip_prefix(text, "core:")) return CoreQ{parse_group_spec(*rest)};
  if (auto rest = detail::strip_prefix(text, "table:")) return TableFileQ{std::string(*rest)};
  if (auto rest = detail::strip_prefix(text, "conj:")) {
    // conj:GROUP[:EXP]; the exponent is the suffix after the last ':' when
    // it parses as an integer and the prefix is a valid group spec.
    std::string_view body = *rest;
    auto pos = body.rfind(':');
    if (pos != std::string_view::npos) {
      std::string_view tail = body.substr(pos + 1);
      try {
        int exponent = detail::parse_int(tail);
        return ConjQ{parse_group_spec(body.substr(0, pos)), exponent};
      } catch (const std::exception&) {
        // fall through: suffix is part of the group spec
      }
    }
    return ConjQ{parse_group_spec(body), 1};
  }
  throw std::invalid_argument(
      "unknown quandle spec: '" + std::string(text) +
      "' (expected trivial:N, dihedral:N, conj:GROUP[:EXP], core:GROUP or table:PATH)");
}

std::string quandle_spec_name(const QuandleSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TrivialQ>) return "trivial:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, DihedralQ>) return "dihedral:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, ConjQ>)
          return "conj:" + group_spec_name(s.group) + ":" + std::to_string(s.exponent);
        if constexpr (std::is_same_v<T, CoreQ>) return "core:" + group_spec_name(s.group);
        if constexpr (std::is_same_v<T, TableFileQ>) return "table:" + s.path;
      },
      spec);
}

}  // namespace qf
