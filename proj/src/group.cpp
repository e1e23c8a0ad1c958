#include "knopf/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace knopf {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group table is empty");
  if (static_cast<int>(names_.size()) != n) throw std::invalid_argument("group: one name per element required");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table is not associative at (" + names_[a] + ", " + names_[b] + ", " +
                                      names_[c] + ")");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] < 0) throw std::invalid_argument("group element " + names_[a] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(names), std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  // r^i s^j ; s r = r^{-1} s
  const int order = 2 * n;
  std::vector<std::string> names;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      std::string s = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      if (j) s += "s";
      names.push_back(s.empty() ? "1" : s);
    }
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
      // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
      int i = ((i1 + (j1 ? -i2 : i2)) % n + n) % n;
      t[a][b] = i + n * ((j1 + j2) % 2);
    }
  return FiniteGroup(std::move(names), std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric group degree must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s = "[";
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(q[i]);
    names.push_back(s + "]");
  }
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(q);
    }
  return FiniteGroup(std::move(names), std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order(), order = g.order() * m;
  std::vector<std::string> names;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < m; ++b) names.push_back("(" + g.name(a) + "," + h.name(b) + ")");
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) t[x][y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  return FiniteGroup(std::move(names), std::move(t));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

}  // namespace knopf
