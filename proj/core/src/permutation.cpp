#include "qf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qf {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<char> seen(n, 0);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("permutation image is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& g) const {
  std::vector<int> im(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) im[x] = g.image_[image_[x]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(image_.size());
  for (int x = 0; x < degree(); ++x) im[image_[x]] = x;
  return Permutation(std::move(im));
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k >= 0 ? *this : inverse();
  if (k < 0) k = -k;
  Permutation acc = identity(degree());
  while (k > 0) {
    if (k & 1) acc = acc.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (image_[x] != x) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(image_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = image_[y]) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

long long Permutation::order() const {
  long long result = 1;
  for (int len : cycle_type()) result = std::lcm<long long>(result, len);
  return result;
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int x = 0; x < degree(); ++x) count += image_[x] == x;
  return count;
}

}  // namespace qf
