#pragma once

// The symmetric algebra Sym(U) of a comodule U, degree by degree.
//
// Monomials of degree d in the variables x_0..x_{n-1} (the basis of U) are
// listed in descending lexicographic order of exponent vectors, so for two
// variables the quadratic monomials are x0^2, x0 x1, x1^2.

#include "knopf/comodule.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace knopf {

using Exponents = std::vector<int>;

/// All exponent vectors of total degree d in n variables, descending lex.
std::vector<Exponents> monomials_of_degree(int n, int d);

/// C(n + d - 1, d), saturated at 2^62.
std::uint64_t monomial_count(int n, int d);

std::string monomial_string(const Exponents& e, const std::vector<std::string>& vars);

/// Monomial bases of all degrees with index lookup.
class MonomialTable {
 public:
  explicit MonomialTable(int nvars) : n_(nvars) {}

  int nvars() const { return n_; }
  /// Monomials of degree d (computed on first use; not thread-safe, call
  /// prepare() first when sharing).
  const std::vector<Exponents>& monomials(int d);
  int index(const Exponents& e);
  void prepare(int max_degree);
  std::vector<std::string> variable_names(const std::string& stem = "x") const;

 private:
  struct Level {
    std::vector<Exponents> mons;
    std::unordered_map<std::uint64_t, int> lookup;
  };
  std::uint64_t key(const Exponents& e) const;
  int n_;
  std::deque<Level> levels_;
};

template <class K>
class SymmetricAlgebra {
 public:
  /// Sym(U) where U is the degree-one comodule (typically V*).
  explicit SymmetricAlgebra(Comodule<K> degree_one) : u_(std::move(degree_one)), table_(u_.dim()) {}

  int nvars() const { return u_.dim(); }
  const Comodule<K>& degree_one() const { return u_; }
  const FiniteGroupScheme<K>& scheme() const { return u_.scheme(); }
  MonomialTable& table() { return table_; }

  /// Computes and caches the coaction on S_0..S_max.
  void prepare(int max_degree) {
    std::lock_guard<std::mutex> lock(mu_);
    table_.prepare(max_degree + 1);
    while (static_cast<int>(powers_.size()) <= max_degree) extend();
  }

  /// S_d as a comodule. prepare(d) must have been called (or is called here
  /// when not shared across threads).
  const Comodule<K>& power(int d) {
    if (static_cast<int>(powers_.size()) <= d) prepare(d);
    return powers_[d];
  }

  const std::vector<Exponents>& monomials(int d) { return table_.monomials(d); }
  std::uint64_t dim(int d) const { return monomial_count(nvars(), d); }

  /// Product of f in S_a and g in S_b.
  Vector<K> multiply(const Vector<K>& f, int a, const Vector<K>& g, int b) {
    const auto& ma = table_.monomials(a);
    const auto& mb = table_.monomials(b);
    table_.monomials(a + b);
    Vector<K> out = zero_vector<K>(static_cast<Eigen::Index>(dim(a + b)), u_.field());
    Exponents e(nvars());
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (is_zero(f(i))) continue;
      for (std::size_t j = 0; j < mb.size(); ++j) {
        if (is_zero(g(j))) continue;
        for (int v = 0; v < nvars(); ++v) e[v] = ma[i][v] + mb[j][v];
        out(table_.index(e)) += f(i) * g(j);
      }
    }
    return out;
  }

 private:
  void extend() {
    const int d = static_cast<int>(powers_.size());
    const SchemePtr<K>& G = u_.scheme_ptr();
    const int m = G->dim();
    if (d == 0) {
      powers_.push_back(Comodule<K>::trivial(G, 1));
      return;
    }
    if (d == 1) {
      powers_.push_back(u_);
      return;
    }
    const Comodule<K>& prev = powers_[d - 1];
    const auto& mons = table_.monomials(d);
    const auto& prev_mons = table_.monomials(d - 1);
    const int N = static_cast<int>(mons.size());
    const Tensor3<K>& mult = G->gamma().algebra.mult;

    // x_i * (monomial r of degree d-1) -> index in degree d
    std::vector<std::vector<int>> times_var(nvars(), std::vector<int>(prev_mons.size()));
    for (int i = 0; i < nvars(); ++i)
      for (std::size_t r = 0; r < prev_mons.size(); ++r) {
        Exponents e = prev_mons[r];
        ++e[i];
        times_var[i][r] = table_.index(e);
      }

    Matrix<K> c = zero_matrix<K>(static_cast<Eigen::Index>(N) * m, N, u_.field());
    struct Term {
      int row;  // monomial index
      int k;    // Gamma basis index
      K c;
    };
    for (int q = 0; q < N; ++q) {
      Exponents e = mons[q];
      int var = 0;
      while (e[var] == 0) ++var;
      --e[var];
      const int q_prev = table_.index(e);
      // rho(x_var) = sum_i x_i (x) gamma_{i,var}
      std::vector<Term> lin;
      for (int i = 0; i < nvars(); ++i)
        for (int k = 0; k < m; ++k) {
          const K& v = u_.coaction()(static_cast<Eigen::Index>(i) * m + k, var);
          if (!is_zero(v)) lin.push_back({i, k, v});
        }
      for (Eigen::Index row = 0; row < prev.coaction().rows(); ++row) {
        const K& v = prev.coaction()(row, q_prev);
        if (is_zero(v)) continue;
        const int r = static_cast<int>(row / m), k2 = static_cast<int>(row % m);
        for (const auto& t : lin) {
          const int target = times_var[t.row][r];
          const K f = t.c * v;
          auto [b, end] = mult.slice(t.k, k2);
          for (auto it = b; it != end; ++it) c(static_cast<Eigen::Index>(target) * m + it->k, q) += f * it->c;
        }
      }
    }
    powers_.push_back(Comodule<K>(G, N, std::move(c)));
  }

  Comodule<K> u_;
  MonomialTable table_;
  std::deque<Comodule<K>> powers_;  // deque: references stay valid as it grows
  std::mutex mu_;
};

}  // namespace knopf
