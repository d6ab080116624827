#ifndef QF_PERMUTATION_HPP
#define QF_PERMUTATION_HPP

#include <cstdint>
#include <vector>

namespace qf {

/// Bijection of {0..n-1}, stored as its image list.
class Permutation {
 public:
  /// Throws std::invalid_argument if `image` is not a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  /// Composition in application order: (f.then(g))(x) == g(f(x)).
  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;  // k may be negative

  bool is_identity() const;
  long long order() const;
  /// Cycle lengths, sorted ascending. An isomorphism invariant.
  std::vector<int> cycle_type() const;
  int fixed_point_count() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

}  // namespace qf

#endif
