#pragma once

// Right comodules over the coordinate ring of a finite group scheme.
//
// A comodule V with basis v_0..v_{n-1} has coaction
//   rho(v_j) = sum_i v_i (x) gamma_ij,   gamma_ij in Gamma = k[G].
// It is stored as one (n*m) x n matrix C with C(i*m + k, j) the coefficient
// of the Gamma-basis element b_k in gamma_ij (m = dim Gamma), so that for a
// coordinate vector x the coaction is simply C x in V (x) Gamma.

#include "knopf/group_scheme.hpp"

namespace knopf {

template <class K>
class Comodule {
 public:
  Comodule(SchemePtr<K> scheme, int dim, Matrix<K> coaction)
      : scheme_(std::move(scheme)), dim_(dim), c_(std::move(coaction)) {
    if (c_.rows() != static_cast<Eigen::Index>(dim_) * m() || c_.cols() != dim_)
      throw DimensionError("coaction matrix must be (dim * dim Gamma) x dim");
  }

  /// Builds the coaction from its Gamma-coefficients gamma[i][j].
  static Comodule from_entries(SchemePtr<K> scheme, const std::vector<std::vector<Vector<K>>>& gamma) {
    const int n = static_cast<int>(gamma.size());
    const int m = scheme->dim();
    Matrix<K> c = zero_matrix<K>(n * m, n, scheme->field());
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(gamma[i].size()) != n) throw DimensionError("coaction must be square");
      for (int j = 0; j < n; ++j) {
        if (gamma[i][j].size() != m) throw DimensionError("coaction entry has the wrong length");
        c.block(i * m, j, m, 1) = gamma[i][j];
      }
    }
    return Comodule(std::move(scheme), n, std::move(c));
  }

  /// rho(v) = v (x) 1 on a space of the given dimension.
  static Comodule trivial(SchemePtr<K> scheme, int dim) {
    std::vector<std::vector<Vector<K>>> g(dim, std::vector<Vector<K>>(dim, scheme->gamma().algebra.zero_vector()));
    for (int i = 0; i < dim; ++i) g[i][i] = scheme->one();
    return from_entries(std::move(scheme), g);
  }

  /// The one-dimensional comodule k_chi of a grouplike chi.
  static Comodule character(SchemePtr<K> scheme, const Vector<K>& chi) {
    return from_entries(std::move(scheme), {{chi}});
  }

  const SchemePtr<K>& scheme_ptr() const { return scheme_; }
  const FiniteGroupScheme<K>& scheme() const { return *scheme_; }
  const FieldSpec& field() const { return scheme_->field(); }
  int dim() const { return dim_; }
  /// Dimension of Gamma.
  int m() const { return scheme_->dim(); }
  const Matrix<K>& coaction() const { return c_; }

  /// gamma_ij as a vector in Gamma.
  Vector<K> entry(int i, int j) const { return c_.block(static_cast<Eigen::Index>(i) * m(), j, m(), 1); }

  /// Matrix of the action of phi in Gamma*: x -> (id (x) phi) rho(x), i.e.
  /// M(i, j) = phi(gamma_ij).
  Matrix<K> action_matrix(const Vector<K>& phi) const {
    Matrix<K> out = zero_matrix<K>(dim_, dim_, field());
    for (int k = 0; k < m(); ++k) {
      if (is_zero(phi(k))) continue;
      for (int j = 0; j < dim_; ++j)
        for (int i = 0; i < dim_; ++i) {
          const K& c = c_(static_cast<Eigen::Index>(i) * m() + k, j);
          if (!is_zero(c)) out(i, j) += c * phi(k);
        }
    }
    return out;
  }

  /// (rho - id (x) 1) as an (n*m) x n matrix; its kernel is the invariants.
  Matrix<K> invariance_system() const {
    Matrix<K> s = c_;
    const Vector<K> one = scheme_->one();
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < m(); ++k)
        if (!is_zero(one(k))) s(static_cast<Eigen::Index>(i) * m() + k, i) -= one(k);
    return s;
  }

 private:
  SchemePtr<K> scheme_;
  int dim_;
  Matrix<K> c_;
};

template <class K>
struct ComoduleReport {
  bool counit_ok = true;
  bool coassociativity_ok = true;
  std::string witness;
  bool ok() const { return counit_ok && coassociativity_ok; }
};

template <class K>
ComoduleReport<K> verify_comodule(const Comodule<K>& V) {
  ComoduleReport<K> rep;
  const HopfAlgebra<K>& H = V.scheme().gamma();
  const int n = V.dim();
  for (int i = 0; i < n && rep.counit_ok; ++i)
    for (int j = 0; j < n; ++j) {
      const K e = H.apply_counit(V.entry(i, j));
      if (!(e == (i == j ? H.algebra.one() : H.algebra.zero()))) {
        rep.counit_ok = false;
        rep.witness = "eps(gamma_" + std::to_string(i) + "," + std::to_string(j) + ") = " + e.str();
        break;
      }
    }
  // Delta(gamma_ij) = sum_l gamma_il (x) gamma_lj
  for (int i = 0; i < n && rep.coassociativity_ok; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<K> rhs = zero_matrix<K>(V.m(), V.m(), V.field());
      for (int l = 0; l < n; ++l) rhs += V.entry(i, l) * V.entry(l, j).transpose();
      if (!equal<K>(H.comultiply(V.entry(i, j)), rhs)) {
        rep.coassociativity_ok = false;
        if (rep.witness.empty())
          rep.witness = "Delta(gamma_" + std::to_string(i) + "," + std::to_string(j) + ") != sum_l gamma_il (x) gamma_lj";
        break;
      }
    }
  return rep;
}

namespace detail {

template <class K>
void require_same_scheme(const Comodule<K>& a, const Comodule<K>& b) {
  if (a.scheme_ptr() != b.scheme_ptr() && &a.scheme() != &b.scheme())
    throw std::invalid_argument("comodules over different group schemes");
}

}  // namespace detail

/// V*: rho(v*_i) = sum_j v*_j (x) S(gamma_ij).
template <class K>
Comodule<K> dual_comodule(const Comodule<K>& V) {
  const int n = V.dim();
  const HopfAlgebra<K>& H = V.scheme().gamma();
  std::vector<std::vector<Vector<K>>> g(n, std::vector<Vector<K>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[j][i] = H.apply_antipode(V.entry(i, j));
  return Comodule<K>::from_entries(V.scheme_ptr(), g);
}

template <class K>
Comodule<K> direct_sum(const Comodule<K>& V, const Comodule<K>& W) {
  detail::require_same_scheme(V, W);
  const int a = V.dim(), b = W.dim();
  const Vector<K> zero = V.scheme().gamma().algebra.zero_vector();
  std::vector<std::vector<Vector<K>>> g(a + b, std::vector<Vector<K>>(a + b, zero));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) g[i][j] = V.entry(i, j);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) g[a + i][a + j] = W.entry(i, j);
  return Comodule<K>::from_entries(V.scheme_ptr(), g);
}

/// V (x) W with basis v_i (x) w_k at index i * dim W + k.
template <class K>
Comodule<K> tensor(const Comodule<K>& V, const Comodule<K>& W) {
  detail::require_same_scheme(V, W);
  const int a = V.dim(), b = W.dim();
  const HopfAlgebra<K>& H = V.scheme().gamma();
  std::vector<std::vector<Vector<K>>> g(a * b, std::vector<Vector<K>>(a * b));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      const Vector<K> vij = V.entry(i, j);
      for (int k = 0; k < b; ++k)
        for (int l = 0; l < b; ++l) g[i * b + k][j * b + l] = H.multiply(vij, W.entry(k, l));
    }
  return Comodule<K>::from_entries(V.scheme_ptr(), g);
}

/// V (x) k_chi: every gamma_ij multiplied by the grouplike chi.
template <class K>
Comodule<K> twist(const Comodule<K>& V, const Vector<K>& chi) {
  const int n = V.dim();
  const HopfAlgebra<K>& H = V.scheme().gamma();
  std::vector<std::vector<Vector<K>>> g(n, std::vector<Vector<K>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = H.multiply(V.entry(i, j), chi);
  return Comodule<K>::from_entries(V.scheme_ptr(), g);
}

/// det(gamma_ij) computed in the commutative ring Gamma: the character of
/// the top exterior power. Throws if the result is not grouplike.
template <class K>
Vector<K> det_character(const Comodule<K>& V) {
  const int n = V.dim();
  const HopfAlgebra<K>& H = V.scheme().gamma();
  if (n > 20) throw std::invalid_argument("det_character: dimension too large");
  // dp over columns 0..c-1 with the set of used rows; sign from inversions
  std::vector<std::optional<Vector<K>>> dp(std::size_t{1} << n);
  dp[0] = H.unit();
  for (int c = 0; c < n; ++c) {
    std::vector<std::optional<Vector<K>>> next(dp.size());
    for (std::size_t used = 0; used < dp.size(); ++used) {
      if (!dp[used]) continue;
      for (int r = 0; r < n; ++r) {
        if (used >> r & 1) continue;
        const Vector<K> g = V.entry(r, c);
        if (is_zero<K>(Matrix<K>(g))) continue;
        // rows already used that come after r are inversions
        const int inv = __builtin_popcountll(used >> (r + 1));
        Vector<K> term = H.multiply(*dp[used], g);
        if (inv % 2) term = -term;
        auto& slot = next[used | (std::size_t{1} << r)];
        if (slot)
          *slot += term;
        else
          slot = term;
      }
    }
    dp = std::move(next);
  }
  Vector<K> det = dp.back() ? *dp.back() : H.algebra.zero_vector();
  if (!is_grouplike(H, det)) throw InconsistencyError("determinant of the coaction is not grouplike");
  return det;
}

// ---------------------------------------------------------------------------
// Comodules from concrete data

/// A constant group acting through matrices: gamma_ij = sum_g g_ij e_g in
/// k^G. mats[g] is the matrix of group element g (indexed as in the scheme).
template <class K>
Comodule<K> constant_group_comodule(SchemePtr<K> scheme, const std::vector<Matrix<K>>& mats) {
  const int m = scheme->dim();
  if (static_cast<int>(mats.size()) != m) throw DimensionError("one matrix per group element required");
  const int n = static_cast<int>(mats.front().rows());
  Matrix<K> c = zero_matrix<K>(n * m, n, scheme->field());
  for (int g = 0; g < m; ++g)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i * m + g, j) = mats[g](i, j);
  return Comodule<K>(std::move(scheme), n, std::move(c));
}

/// Diagonal action of a group scheme whose coordinate ring has grouplike
/// basis elements: rho(v_j) = v_j (x) b_{index[j]}.
template <class K>
Comodule<K> diagonal_comodule(SchemePtr<K> scheme, const std::vector<int>& basis_index) {
  const int n = static_cast<int>(basis_index.size());
  const int m = scheme->dim();
  Matrix<K> c = zero_matrix<K>(n * m, n, scheme->field());
  for (int j = 0; j < n; ++j) c(j * m + basis_index[j], j) = scalar<K>(1, scheme->field());
  return Comodule<K>(std::move(scheme), n, std::move(c));
}

}  // namespace knopf
