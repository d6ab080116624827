#include "qf/words.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qf {

QuandleWord normalize(QuandleWord w) {
  std::vector<WordLetter> reduced;
  reduced.reserve(w.tail.size());
  for (const WordLetter& l : w.tail) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("word sign must be +1 or -1");
    if (!reduced.empty() && reduced.back().letter == l.letter &&
        reduced.back().sign == -l.sign) {
      reduced.pop_back();  // (y,e)(y,-e) cancels
    } else {
      reduced.push_back(l);
    }
  }
  // head rule: a0 *^e a0 = a0
  std::size_t start = 0;
  while (start < reduced.size() && reduced[start].letter == w.base) ++start;
  w.tail.assign(reduced.begin() + static_cast<std::ptrdiff_t>(start), reduced.end());
  return w;
}

QuandleWord compose(const QuandleWord& w1, const QuandleWord& w2, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("compose sign must be +1 or -1");
  QuandleWord result;
  result.base = w1.base;
  result.tail = w1.tail;
  for (auto it = w2.tail.rbegin(); it != w2.tail.rend(); ++it) {
    result.tail.push_back({it->letter, -it->sign});
  }
  result.tail.push_back({w2.base, sign});
  result.tail.insert(result.tail.end(), w2.tail.begin(), w2.tail.end());
  return normalize(std::move(result));
}

int evaluate(const QuandleWord& w, const QuandleTable& t) {
  auto in_range = [&](int v) { return v >= 0 && v < t.size(); };
  if (!in_range(w.base)) throw std::out_of_range("word base out of range");
  int acc = w.base;
  for (const WordLetter& l : w.tail) {
    if (!in_range(l.letter)) throw std::out_of_range("word letter out of range");
    acc = l.sign > 0 ? t.op(acc, l.letter) : t.dual_op(acc, l.letter);
  }
  return acc;
}

QuandleWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  QuandleWord w;
  if (!(in >> w.base)) throw std::invalid_argument("word must start with an element index");
  std::string op;
  while (in >> op) {
    int sign;
    if (op == "*") {
      sign = 1;
    } else if (op == "*-") {
      sign = -1;
    } else {
      throw std::invalid_argument("expected '*' or '*-', got '" + op + "'");
    }
    int letter;
    if (!(in >> letter)) throw std::invalid_argument("dangling operator in word");
    w.tail.push_back({letter, sign});
  }
  return w;
}

std::string format_word(const QuandleWord& w) {
  std::ostringstream out;
  out << w.base;
  for (const WordLetter& l : w.tail) out << (l.sign > 0 ? " * " : " *- ") << l.letter;
  return out.str();
}

std::string presentation(const QuandleTable& t) {
  const int n = t.size();
  std::ostringstream out;
  out << "generators:";
  for (int i = 0; i < n; ++i) out << " e" << i;
  out << "\n";
  std::set<std::string> seen;
  std::vector<std::string> lines;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::ostringstream rel;
      rel << "e" << t.op(x, y) << " = e" << y << "^-1 e" << x << " e" << y;
      if (seen.insert(rel.str()).second) lines.push_back(rel.str());
    }
  }
  for (const auto& line : lines) out << line << "\n";
  return out.str();
}

GroupWord gw_generator(int gen, long long exp) {
  GroupWord w;
  if (exp != 0) w.syllables.push_back({gen, exp});
  return w;
}

GroupWord gw_concat(const GroupWord& u, const GroupWord& v) {
  GroupWord w = u;
  for (const auto& s : v.syllables) {
    if (!w.syllables.empty() && w.syllables.back().first == s.first) {
      w.syllables.back().second += s.second;
      if (w.syllables.back().second == 0) w.syllables.pop_back();
    } else {
      w.syllables.push_back(s);
    }
  }
  return w;
}

GroupWord gw_inverse(const GroupWord& u) {
  GroupWord w;
  for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it) {
    w.syllables.push_back({it->first, -it->second});
  }
  return w;
}

GroupWord gw_pow(const GroupWord& u, long long k) {
  GroupWord base = k >= 0 ? u : gw_inverse(u);
  if (k < 0) k = -k;
  GroupWord acc;
  for (long long i = 0; i < k; ++i) acc = gw_concat(acc, base);
  return acc;
}

bool psi_identity_reduces(int n) {
  // generators: 0 = p, 1 = x
  const GroupWord p = gw_generator(0, 1);
  const GroupWord xn = gw_generator(1, n);
  const GroupWord xni = gw_generator(1, -n);
  const GroupWord conj_p = gw_concat(gw_concat(xni, p), xn);          // x^-n p x^n
  const GroupWord lhs = gw_pow(conj_p, n);                            // (x^-n p x^n)^n
  const GroupWord rhs = gw_concat(gw_concat(xni, gw_pow(p, n)), xn);  // x^-n p^n x^n
  return gw_concat(lhs, gw_inverse(rhs)).empty();
}

FunctorIdentityReport verify_functor_identities(const QuandleTable& t, int n) {
  if (n < 1) throw std::invalid_argument("verify_functor_identities: n must be >= 1");
  FunctorIdentityReport report;
  report.psi_ok = psi_identity_reduces(n);

  QuandleTable tn = iterate(t, n);
  std::vector<Permutation> rpow;  // R_y^n for each y
  rpow.reserve(t.size());
  for (int y = 0; y < t.size(); ++y) rpow.push_back(translations(t, y).right.pow(n));
  report.sigma_ok = true;
  for (int x = 0; x < t.size(); ++x) {
    for (int y = 0; y < t.size(); ++y) {
      ++report.pairs_checked;
      const Permutation& lhs = rpow[tn.op(x, y)];
      Permutation rhs = rpow[y].inverse().then(rpow[x]).then(rpow[y]);
      if (!(lhs == rhs)) {
        report.sigma_ok = false;
        report.sigma_failures.push_back({x, y});
      }
    }
  }
  return report;
}

}  // namespace qf
