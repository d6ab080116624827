#ifndef QF_WORDS_HPP
#define QF_WORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qf/quandle.hpp"

namespace qf {

struct WordLetter {
  int letter;
  int sign;  // +1 or -1
  bool operator==(const WordLetter&) const = default;
};

/// Left-associated quandle word a0 *^{e1} a1 *^{e2} ... *^{ek} ak.
/// Canonical form (after normalize): the tail carries no adjacent
/// (y,+1)(y,-1) or (y,-1)(y,+1) pair, and the base differs from the first
/// tail letter.
struct QuandleWord {
  int base = 0;
  std::vector<WordLetter> tail;
  bool operator==(const QuandleWord&) const = default;
};

/// Free cancellation in the tail plus the head rule (drop a leading tail
/// letter equal to the base). Idempotent and evaluation-preserving.
QuandleWord normalize(QuandleWord w);

/// Left-associated form of (w1 *^{sign} w2): w1's tail, then w2's tail
/// reversed with inverted signs, then (w2.base, sign), then w2's tail,
/// followed by normalize.
QuandleWord compose(const QuandleWord& w1, const QuandleWord& w2, int sign);

/// Left fold of op (sign +1) or the dual operation (sign -1).
int evaluate(const QuandleWord& w, const QuandleTable& t);

/// Text syntax: `a0 [*|*-] a1 ...`, whitespace separated, e.g. "0 * 1 *- 2".
QuandleWord parse_word(std::string_view text);
std::string format_word(const QuandleWord& w);

/// Presentation of the associated group: generators e0..e{n-1} and one
/// relation e{x*y} = e{y}^-1 e{x} e{y} per ordered pair x != y,
/// deduplicated, one per line, in (x,y) order.
std::string presentation(const QuandleTable& t);

/// Freely reduced word in a free group; syllables are (generator, exponent)
/// with distinct adjacent generators and nonzero exponents.
struct GroupWord {
  std::vector<std::pair<int, long long>> syllables;
  bool empty() const { return syllables.empty(); }
  bool operator==(const GroupWord&) const = default;
};

GroupWord gw_generator(int gen, long long exp);
GroupWord gw_concat(const GroupWord& u, const GroupWord& v);
GroupWord gw_inverse(const GroupWord& u);
GroupWord gw_pow(const GroupWord& u, long long k);

struct FunctorIdentityReport {
  bool psi_ok = false;    // (x^-n p x^n)^n (x^-n p^n x^n)^-1 reduces to empty
  bool sigma_ok = false;  // R_{x *_n y}^n = R_y^-n R_x^n R_y^n for all pairs
  int pairs_checked = 0;
  std::vector<std::pair<int, int>> sigma_failures;
  bool ok() const { return psi_ok && sigma_ok; }
};

FunctorIdentityReport verify_functor_identities(const QuandleTable& t, int n);

/// The psi identity alone, checked symbolically in the free group on two
/// generators; independent of any table.
bool psi_identity_reduces(int n);

}  // namespace qf

#endif
