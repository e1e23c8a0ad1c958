#pragma once

// Invariants of comodules and of the graded ring A = S^G.
//
// Two routes are available. The kernel route solves rho(x) = x (x) 1
// directly, an (n*m) x n system. The generator route uses that x is
// invariant iff phi.x = phi(1) x for every phi in an algebra generating set
// of Gamma*; it is much smaller and is the default. A third route, weight
// counting, applies to diagonal actions.

#include "knopf/parallel.hpp"
#include "knopf/symmetric_power.hpp"

namespace knopf {

/// Elements of Gamma* (coordinates in the dual basis) generating it as an
/// algebra, chosen greedily from the dual basis in order.
template <class K>
std::vector<Vector<K>> dual_algebra_generators(const FiniteGroupScheme<K>& G) {
  const HopfAlgebra<K>& D = G.dual();
  const int m = D.dim();
  std::vector<Vector<K>> gens;
  auto closure_dim = [&](const std::vector<Vector<K>>& gs) {
    RowEchelon<K> span(static_cast<std::size_t>(m), D.field());
    std::vector<Vector<K>> elems{D.unit()};
    span.add(D.unit());
    for (std::size_t s = 0; s < elems.size(); ++s)
      for (const auto& g : gs) {
        Vector<K> prod = D.multiply(g, elems[s]);
        if (span.add(prod)) elems.push_back(prod);
      }
    return span.rank();
  };
  std::size_t have = closure_dim(gens);
  for (int i = 0; i < m && have < static_cast<std::size_t>(m); ++i) {
    gens.push_back(D.algebra.basis_vector(i));
    std::size_t now = closure_dim(gens);
    if (now == have)
      gens.pop_back();
    else
      have = now;
  }
  return gens;
}

/// Invariants via the full coaction: kernel of (rho - id (x) 1).
template <class K>
std::vector<Vector<K>> invariants_kernel_route(const Comodule<K>& V) {
  return kernel_basis<K>(V.invariance_system(), V.field());
}

/// Invariants of V (x) k_chi (chi a grouplike, or none) via algebra
/// generators of Gamma*.
template <class K>
std::vector<Vector<K>> invariants_generator_route(const Comodule<K>& V, const std::vector<Vector<K>>& gens,
                                                  const Vector<K>* chi = nullptr) {
  const HopfAlgebra<K>& H = V.scheme().gamma();
  const int n = V.dim();
  RowEchelon<K> sys(static_cast<std::size_t>(n), V.field());
  for (const auto& phi : gens) {
    // (V (x) chi): phi(gamma_ij chi) = psi(gamma_ij) with psi_k = phi(b_k chi)
    Vector<K> psi = phi;
    if (chi) {
      for (int k = 0; k < H.dim(); ++k) psi(k) = phi.dot(H.multiply(H.algebra.basis_vector(k), *chi));
    }
    Matrix<K> m = V.action_matrix(psi);
    const K eig = phi.dot(H.unit());
    for (int i = 0; i < n; ++i) m(i, i) -= eig;
    for (int i = 0; i < n && !sys.full(); ++i) sys.add(m.row(i));
    if (sys.full()) break;
  }
  return sys.kernel();
}

template <class K>
std::vector<Vector<K>> invariants(const Comodule<K>& V) {
  return invariants_generator_route(V, dual_algebra_generators(V.scheme()));
}

// ---------------------------------------------------------------------------
// Diagonal actions

/// A diagonal action on V with basis weights w_j: the torus G_m when
/// modulus is 0, or mu_m. The variables of S = Sym V* carry weights -w_j.
struct DiagonalizableAction {
  std::vector<long> weights;
  long modulus = 0;

  int dim() const { return static_cast<int>(weights.size()); }
  bool weight_is_zero(long w) const { return modulus == 0 ? w == 0 : ((w % modulus) + modulus) % modulus == 0; }
  /// Weight of det V.
  long det_weight() const {
    long s = 0;
    for (long w : weights) s += w;
    return s;
  }
  bool is_trivial_weight(long w) const { return weight_is_zero(w); }
};

/// Indices (in monomials_of_degree order) of the degree-d monomials of S
/// spanning the invariants of S_d (x) chi, chi of weight chi_weight.
std::vector<int> weight_invariant_monomials(const DiagonalizableAction& a, int d, long chi_weight = 0);

/// dim (S_d (x) chi)^G by counting weight-zero monomials, d = 0..D.
std::vector<long> weight_hilbert_function(const DiagonalizableAction& a, int D, long chi_weight = 0);

// ---------------------------------------------------------------------------

/// The graded invariants (S_d (x) chi)^G for d = 0, 1, ..., computed once
/// per degree and cached.
template <class K>
class GradedInvariantRing {
 public:
  GradedInvariantRing(std::shared_ptr<SymmetricAlgebra<K>> S, std::optional<Vector<K>> chi = {})
      : S_(std::move(S)), chi_(std::move(chi)), gens_(dual_algebra_generators(S_->scheme())) {}

  /// Fills the cache for degrees 0..D using up to `jobs` threads.
  void compute(int D, int jobs = 1) {
    S_->prepare(D);
    if (static_cast<int>(cache_.size()) <= D) cache_.resize(D + 1);
    std::vector<int> todo;
    for (int d = 0; d <= D; ++d)
      if (!cache_[d]) todo.push_back(d);
    parallel_for(0, static_cast<int>(todo.size()), jobs, [&](int i) {
      const int d = todo[i];
      cache_[d] = invariants_generator_route(S_->power(d), gens_, chi_ ? &*chi_ : nullptr);
    });
  }

  const std::vector<Vector<K>>& degree(int d) {
    compute(d);
    return *cache_[d];
  }

  std::vector<long> hilbert(int D, int jobs = 1) {
    compute(D, jobs);
    std::vector<long> h;
    for (int d = 0; d <= D; ++d) h.push_back(static_cast<long>(cache_[d]->size()));
    return h;
  }

  SymmetricAlgebra<K>& symmetric_algebra() { return *S_; }
  const std::optional<Vector<K>>& twist() const { return chi_; }

 private:
  std::shared_ptr<SymmetricAlgebra<K>> S_;
  std::optional<Vector<K>> chi_;
  std::vector<Vector<K>> gens_;
  std::vector<std::optional<std::vector<Vector<K>>>> cache_;
};

}  // namespace knopf
