#include "knopf/invariants.hpp"

namespace knopf {

std::vector<int> weight_invariant_monomials(const DiagonalizableAction& a, int d, long chi_weight) {
  std::vector<int> out;
  const auto mons = monomials_of_degree(a.dim(), d);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    long w = chi_weight;
    for (int v = 0; v < a.dim(); ++v) w -= mons[i][v] * a.weights[v];
    if (a.weight_is_zero(w)) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

// Number of exponent vectors of total degree d whose weight sum hits each
// residue (or value), by dynamic programming over the variables.
std::vector<long> count_by_weight(const DiagonalizableAction& a, int D, long chi_weight) {
  const int n = a.dim();
  std::vector<long> out(static_cast<std::size_t>(D) + 1, 0);
  if (a.modulus > 0) {
    const long m = a.modulus;
    // table[d][r]: monomials of degree d with weight = r mod m
    std::vector<std::vector<long>> t(D + 1, std::vector<long>(m, 0));
    t[0][0] = 1;
    for (int v = 0; v < n; ++v) {
      const long w = ((-a.weights[v]) % m + m) % m;
      for (int d = 1; d <= D; ++d)
        for (long r = 0; r < m; ++r) t[d][(r + w) % m] += t[d - 1][r];
    }
    const long target = ((-chi_weight) % m + m) % m;
    for (int d = 0; d <= D; ++d) out[d] = t[d][target];
    return out;
  }
  long maxw = 0;
  for (long w : a.weights) maxw = std::max(maxw, std::labs(w));
  const long span = maxw * D;
  const long width = 2 * span + 1;
  std::vector<std::vector<long>> t(D + 1, std::vector<long>(width, 0));
  t[0][span] = 1;
  for (int v = 0; v < n; ++v) {
    const long w = -a.weights[v];
    for (int d = 1; d <= D; ++d)
      for (long s = 0; s < width; ++s)
        if (t[d - 1][s] && s + w >= 0 && s + w < width) t[d][s + w] += t[d - 1][s];
  }
  for (int d = 0; d <= D; ++d) {
    const long idx = span - chi_weight;
    out[d] = idx >= 0 && idx < width ? t[d][idx] : 0;
  }
  return out;
}

}  // namespace

std::vector<long> weight_hilbert_function(const DiagonalizableAction& a, int D, long chi_weight) {
  return count_by_weight(a, D, chi_weight);
}

}  // namespace knopf
