#pragma once

// The trace map Tr : S -> A, s -> (id (x) delta) rho(s), with delta the
// normalized left integral of k[G]*.

#include "knopf/invariants.hpp"

namespace knopf {

/// The left integral of Gamma* normalized so its first nonzero coordinate is
/// 1. For k^G this is the all-ones vector, i.e. delta(e_g) = 1.
template <class K>
Vector<K> trace_integral(const FiniteGroupScheme<K>& G) {
  return integrals(G.dual(), Side::Left).generator();
}

/// Matrix of Tr on S_d in the monomial basis.
template <class K>
Matrix<K> trace_matrix(SymmetricAlgebra<K>& S, int d, const Vector<K>& delta) {
  return S.power(d).action_matrix(delta);
}

template <class K>
Vector<K> trace_map(SymmetricAlgebra<K>& S, int d, const Vector<K>& s) {
  const Vector<K> delta = trace_integral(S.scheme());
  Vector<K> out = trace_matrix(S, d, delta) * s;
  const Matrix<K> sys = S.power(d).invariance_system();
  if (!is_zero<K>(Matrix<K>(sys * out))) throw InconsistencyError("trace image is not invariant");
  return out;
}

struct DegreeCheck {
  int degree = 0;
  bool ok = true;
  std::string note;
};

struct TraceReport {
  int window = 0;
  bool image_invariant = true;
  std::vector<DegreeCheck> image;
  /// Set when Gamma* is unimodular and the check ran.
  std::optional<bool> equivariant;
  std::string equivariance_note;
  std::vector<DegreeCheck> equivariance;
  /// Per degree d: every monomial s of S_d has some t, deg t <= D - d, with
  /// Tr(st) != 0. A failure at a degree near D is inconclusive.
  std::vector<DegreeCheck> nondegeneracy;
  /// Tr(a s) = a Tr(s) on sampled invariants a and monomials s.
  bool a_linear = true;
  /// For non-modular constant groups: Tr restricted to A is |G| * id.
  std::optional<bool> reynolds_scaling;
};

/// Checks image-in-A, equivariance (when Gamma* is unimodular), A-linearity
/// on samples, the truncated nondegeneracy proxy, and optionally the
/// Reynolds scaling Tr|_A = order * id.
template <class K>
TraceReport trace_equivariance_check(SymmetricAlgebra<K>& S, int D, std::optional<long> reynolds_order = {}) {
  TraceReport rep;
  rep.window = D;
  const FiniteGroupScheme<K>& G = S.scheme();
  const Vector<K> delta = trace_integral(G);
  const bool unimodular = is_unimodular(G.dual());
  S.prepare(D);
  const auto gens = dual_algebra_generators(G);
  std::vector<Matrix<K>> T;
  std::vector<std::vector<Vector<K>>> inv;
  for (int d = 0; d <= D; ++d) {
    T.push_back(trace_matrix(S, d, delta));
    inv.push_back(invariants_generator_route(S.power(d), gens));
  }

  for (int d = 0; d <= D; ++d) {
    DegreeCheck c{d, true, {}};
    // columns of T must lie in the invariant subspace
    RowEchelon<K> span(static_cast<std::size_t>(S.dim(d)), S.degree_one().field());
    for (const auto& v : inv[d]) span.add(v);
    for (Eigen::Index j = 0; j < T[d].cols() && c.ok; ++j)
      if (!span.contains(T[d].col(j))) {
        c.ok = false;
        c.note = "Tr of monomial " + std::to_string(j) + " is not invariant";
      }
    rep.image_invariant = rep.image_invariant && c.ok;
    rep.image.push_back(c);
  }

  if (unimodular) {
    bool all = true;
    for (int d = 0; d <= D; ++d) {
      // (Tr (x) id) rho(s) = Tr(s) (x) 1, i.e. T C_k = unit_k T for each k
      const Comodule<K>& Sd = S.power(d);
      const int m = Sd.m(), N = Sd.dim();
      const Vector<K> one = G.one();
      DegreeCheck c{d, true, {}};
      for (int k = 0; k < m && c.ok; ++k) {
        // T C_k column by column, skipping the (many) zero entries of C_k
        Matrix<K> lhs = zero_matrix<K>(N, N, G.field());
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) {
            const K& x = Sd.coaction()(static_cast<Eigen::Index>(i) * m + k, j);
            if (!is_zero(x)) lhs.col(j) += x * T[d].col(i);
          }
        if (!equal<K>(lhs, Matrix<K>(one(k) * T[d]))) {
          c.ok = false;
          c.note = "component " + G.gamma().labels()[k];
        }
      }
      all = all && c.ok;
      rep.equivariance.push_back(c);
    }
    rep.equivariant = all;
  } else {
    rep.equivariance_note = "skipped: k[G]* is not unimodular, so Tr need not be G-linear";
  }

  // nondegeneracy proxy: a monomial u divisible by s with Tr(u) != 0
  std::vector<std::vector<bool>> nonzero_col(D + 1);
  for (int d = 0; d <= D; ++d) {
    nonzero_col[d].resize(T[d].cols());
    for (Eigen::Index j = 0; j < T[d].cols(); ++j) nonzero_col[d][j] = !is_zero<K>(Matrix<K>(T[d].col(j)));
  }
  for (int d = 0; d <= D; ++d) {
    DegreeCheck c{d, true, {}};
    const auto& mons = S.monomials(d);
    for (std::size_t q = 0; q < mons.size() && c.ok; ++q) {
      bool found = false;
      for (int e = d; e <= D && !found; ++e) {
        const auto& big = S.monomials(e);
        for (std::size_t u = 0; u < big.size() && !found; ++u) {
          if (!nonzero_col[e][u]) continue;
          bool divides = true;
          for (int v = 0; v < S.nvars() && divides; ++v) divides = big[u][v] >= mons[q][v];
          found = divides;
        }
      }
      if (!found) {
        c.ok = false;
        c.note = "no partner within window for monomial " + std::to_string(q) +
                 (d > D / 2 ? " (inconclusive near the window boundary)" : "");
      }
    }
    rep.nondegeneracy.push_back(c);
  }

  // A-linearity on a few samples: invariant a of degree da, monomial s of degree ds
  for (int da = 1; da <= D && rep.a_linear; ++da) {
    if (inv[da].empty()) continue;
    const Vector<K>& a = inv[da].front();
    for (int ds = 0; da + ds <= D && ds <= 2 && rep.a_linear; ++ds) {
      const int N = static_cast<int>(S.dim(ds));
      for (int q = 0; q < N && q < 4; ++q) {
        const Vector<K> s = unit_vector<K>(N, q, S.degree_one().field());
        const Vector<K> lhs = T[da + ds] * S.multiply(a, da, s, ds);
        const Vector<K> rhs = S.multiply(a, da, Vector<K>(T[ds] * s), ds);
        if (!equal<K>(lhs, rhs)) rep.a_linear = false;
      }
    }
  }

  if (reynolds_order) {
    bool ok = true;
    const K scale = scalar<K>(*reynolds_order, S.degree_one().field());
    for (int d = 0; d <= D && ok; ++d)
      for (const auto& a : inv[d])
        if (!equal<K>(Vector<K>(T[d] * a), Vector<K>(scale * a))) ok = false;
    rep.reynolds_scaling = ok;
  }
  return rep;
}

}  // namespace knopf
