#pragma once

// Standard Hopf algebras: group algebras, function algebras, restricted
// enveloping algebras.

#include "knopf/group.hpp"
#include "knopf/hopf.hpp"

#include <functional>
#include <map>
#include <unordered_map>

namespace knopf {

/// kG: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
template <class K>
HopfAlgebra<K> group_algebra(const FiniteGroup& G, const FieldSpec& field) {
  const int n = G.order();
  const K one = scalar<K>(1, field);
  std::vector<TensorEntry<K>> mult, comult;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mult.push_back({a, b, G.mul(a, b), one});
    comult.push_back({a, a, a, one});
  }
  HopfAlgebra<K> H;
  H.algebra.field = field;
  H.algebra.labels = G.names();
  H.algebra.mult = Tensor3<K>(n, std::move(mult));
  H.algebra.unit = unit_vector<K>(n, G.identity(), field);
  H.comult = Tensor3<K>(n, std::move(comult));
  H.counit = Vector<K>::Constant(n, one);
  H.antipode = zero_matrix<K>(n, n, field);
  for (int a = 0; a < n; ++a) H.antipode(G.inverse(a), a) = one;
  return H;
}

/// k^G with basis the indicator functions e_g: e_g e_h = delta_{g,h} e_g,
/// Delta(e_g) = sum_{hk=g} e_h (x) e_k, eps(e_g) = delta_{g,1},
/// S(e_g) = e_{g^{-1}}.
template <class K>
HopfAlgebra<K> function_algebra(const FiniteGroup& G, const FieldSpec& field) {
  const int n = G.order();
  const K one = scalar<K>(1, field);
  std::vector<TensorEntry<K>> mult, comult;
  for (int a = 0; a < n; ++a) {
    mult.push_back({a, a, a, one});
    for (int b = 0; b < n; ++b) comult.push_back({G.mul(a, b), a, b, one});
  }
  HopfAlgebra<K> H;
  H.algebra.field = field;
  for (const auto& s : G.names()) H.algebra.labels.push_back("e_" + s);
  H.algebra.mult = Tensor3<K>(n, std::move(mult));
  H.algebra.unit = Vector<K>::Constant(n, one);
  H.comult = Tensor3<K>(n, std::move(comult));
  H.counit = unit_vector<K>(n, G.identity(), field);
  H.antipode = zero_matrix<K>(n, n, field);
  for (int a = 0; a < n; ++a) H.antipode(G.inverse(a), a) = one;
  return H;
}

/// A restricted Lie algebra over F_p on basis x_0..x_{d-1}.
struct RestrictedLieAlgebra {
  std::uint32_t p = 2;
  std::vector<std::string> labels;
  /// bracket[i][j][k]: [x_i, x_j] = sum_k bracket[i][j][k] x_k (residues mod p)
  std::vector<std::vector<std::vector<long>>> bracket;
  /// pmap[i][k]: x_i^[p] = sum_k pmap[i][k] x_k
  std::vector<std::vector<long>> pmap;

  int dim() const { return static_cast<int>(labels.size()); }
};

struct LieCheck {
  bool ok = true;
  std::string failure;
};

/// Antisymmetry, Jacobi identity, and Jacobson's condition
/// (ad x_i)^p = ad(x_i^[p]) on every basis vector. The last one is what makes
/// the basis values extend to a p-map on all of L.
LieCheck check_restricted_lie(const RestrictedLieAlgebra& L);

namespace detail {

/// Multiplication in u(L) on PBW monomials x_0^{a_0} ... x_{d-1}^{a_{d-1}},
/// indexed by sum_k a_k p^k (first generator varies fastest).
class PbwEngine {
 public:
  explicit PbwEngine(const RestrictedLieAlgebra& L, std::size_t step_limit = 1u << 24);

  int dim() const { return n_; }
  std::vector<int> exponents(int index) const;
  int index(const std::vector<int>& exps) const;
  std::string label(int index) const;

  /// x_g * (monomial m), as a dense coefficient vector mod p.
  const std::vector<std::uint32_t>& times_generator(int g, int m);
  /// (monomial a) * (monomial b)
  std::vector<std::uint32_t> multiply(int a, int b);
  /// Product of an arbitrary element with a monomial on the left.
  std::vector<std::uint32_t> left_multiply(int monomial, const std::vector<std::uint32_t>& v);

 private:
  const RestrictedLieAlgebra& L_;
  std::uint32_t p_;
  int d_, n_;
  std::vector<int> pow_;
  std::vector<std::vector<std::uint32_t>> memo_;  // (g * n + m)
  std::vector<char> state_;                       // 0 fresh, 1 in progress, 2 done
  std::size_t steps_ = 0, step_limit_;

  void add_scaled(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src, std::uint64_t f) const;
  std::vector<std::uint32_t> generator_times_element(int g, const std::vector<std::uint32_t>& v);
  std::vector<std::uint32_t> linear_times_element(const std::vector<long>& coeffs, const std::vector<std::uint32_t>& v);
};

}  // namespace detail

/// u(L): dimension p^{dim L}, PBW basis with the first generator's exponent
/// varying fastest (so for two generators e, f and p = 2 the basis is
/// 1, e, f, ef). Generators are primitive.
HopfAlgebra<Fp> restricted_enveloping(const RestrictedLieAlgebra& L);

/// The two-dimensional L with [f, e] = e, e^[p] = 0, f^[p] = f, basis (e, f).
RestrictedLieAlgebra affine_line_lie_algebra(std::uint32_t p);
/// The abelian L on two generators with zero p-map.
RestrictedLieAlgebra abelian_lie_algebra(std::uint32_t p, int dim);

}  // namespace knopf
