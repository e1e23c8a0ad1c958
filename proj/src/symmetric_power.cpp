#include "knopf/symmetric_power.hpp"

namespace knopf {

namespace {

void enumerate(int n, int d, int var, Exponents& cur, std::vector<Exponents>& out) {
  if (var == n - 1) {
    cur[var] = d;
    out.push_back(cur);
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[var] = a;
    enumerate(n, d - a, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int n, int d) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents cur(n, 0);
  enumerate(n, d, 0, cur, out);
  return out;
}

std::uint64_t monomial_count(int n, int d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n - 1 + d, n - 1)
  std::uint64_t r = 1;
  const int k = n - 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(d) + i;
    if (r > (std::uint64_t{1} << 62) / num) return std::uint64_t{1} << 62;
    r = r * num / i;
  }
  return r;
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::uint64_t MonomialTable::key(const Exponents& e) const {
  std::uint64_t k = 0;
  for (int v : e) k = k * 1000003ULL + static_cast<std::uint64_t>(v);
  return k;
}

const std::vector<Exponents>& MonomialTable::monomials(int d) {
  while (static_cast<int>(levels_.size()) <= d) {
    Level lv;
    lv.mons = monomials_of_degree(n_, static_cast<int>(levels_.size()));
    for (std::size_t i = 0; i < lv.mons.size(); ++i) lv.lookup.emplace(key(lv.mons[i]), static_cast<int>(i));
    levels_.push_back(std::move(lv));
  }
  return levels_[d].mons;
}

int MonomialTable::index(const Exponents& e) {
  int d = 0;
  for (int v : e) d += v;
  monomials(d);
  auto it = levels_[d].lookup.find(key(e));
  if (it == levels_[d].lookup.end()) throw std::out_of_range("monomial not found");
  return it->second;
}

void MonomialTable::prepare(int max_degree) { monomials(max_degree); }

std::vector<std::string> MonomialTable::variable_names(const std::string& stem) const {
  std::vector<std::string> out;
  if (n_ <= 3 && stem == "x") {
    for (int i = 0; i < n_; ++i) out.push_back(std::string(1, "xyz"[i]));
    return out;
  }
  for (int i = 0; i < n_; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace knopf
