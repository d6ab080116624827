#ifndef QF_GROUP_HPP
#define QF_GROUP_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qf/errors.hpp"

namespace qf {

/// Thrown when a multiplication table fails one of the group laws.
/// `law` names the violated law, `x,y,z` are a witness.
struct GroupLawError : std::runtime_error {
  GroupLawError(std::string law_, int x_, int y_, int z_, const std::string& what_);
  std::string law;
  int x, y, z;
};

/// Finite group as a multiplication table. Immutable after construction;
/// the constructor checks identity, inverses and associativity exhaustively
/// and throws GroupLawError on the first violation.
class GroupTable {
 public:
  GroupTable(int size, std::vector<int> mul_row_major, int identity,
             std::string name = "");

  int size() const { return n_; }
  int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x) * n_ + y]; }
  int identity() const { return identity_; }
  int inverse(int x) const { return inv_[x]; }
  /// x^k for any integer k (negative powers via the inverse).
  int power(int x, long long k) const;
  const std::string& name() const { return name_; }

 private:
  int n_;
  std::vector<int> mul_;
  int identity_;
  std::vector<int> inv_;
  std::string name_;
};

struct CyclicG {
  int n;
};
struct DihedralG {
  int n;  // order 2n
};
struct SymmetricG {
  int n;  // n <= 5
};
struct GroupFileG {
  std::string path;
};
using GroupSpec = std::variant<CyclicG, DihedralG, SymmetricG, GroupFileG>;

GroupTable build_group(const GroupSpec& spec);

/// Orbits of the conjugation action, each block sorted, blocks ordered by
/// their least element.
std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g);

/// File format: optional '#' comment lines, then `n`, then `identity k`,
/// then n rows of n indices (row x holds x*0 .. x*(n-1)).
GroupTable load_group_table(const std::filesystem::path& path);
std::string serialize_group(const GroupTable& g);

/// Spec strings: "cyclic:N", "dihgroup:N", "sym:N", "gtable:PATH".
GroupSpec parse_group_spec(std::string_view text);
std::string group_spec_name(const GroupSpec& spec);

}  // namespace qf

#endif
