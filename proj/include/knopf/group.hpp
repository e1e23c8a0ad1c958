#pragma once

// Finite abstract groups by multiplication table.

#include <string>
#include <vector>

namespace knopf {

class FiniteGroup {
 public:
  /// table[a][b] = index of a*b. Throws std::invalid_argument unless the
  /// table is a group.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  /// Dihedral group of order 2n: r^i s^j at index i + n*j.
  static FiniteGroup dihedral(int n);
  /// All permutations of {0..n-1} in lexicographic order.
  static FiniteGroup symmetric(int n);
  /// Pairs (g, h) at index g * |H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool is_abelian() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

}  // namespace knopf
