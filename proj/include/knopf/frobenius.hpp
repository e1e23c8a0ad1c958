#pragma once

// Frobenius and symmetric structure of a finite-dimensional algebra.
//
// A bilinear form with beta(ac, b) = beta(a, cb) is determined by the
// functional phi = beta(1, -) via beta(a, b) = phi(ab), and every phi gives
// such a form. So the associative forms are parametrized by A*, and the
// symmetric ones by the functionals vanishing on commutators. The remaining
// question is whether the linear family of Gram matrices
//   G(phi)_{ij} = phi(b_i b_j)
// contains an invertible member.

#include "knopf/extension_field.hpp"
#include "knopf/hopf.hpp"

#include <memory>
#include <random>

namespace knopf {

enum class SearchOutcome {
  Found,       // an explicit nondegenerate form was found
  Exhausted,   // a complete search found none
  NotFound,    // none found by the probing search, which is not exhaustive
};

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Exhausted: return "none (exhaustive)";
    case SearchOutcome::NotFound: return "none found (probabilistic)";
  }
  return "?";
}

template <class K>
struct FormSearchResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::size_t family_dim = 0;      // r, the number of free parameters
  std::optional<Vector<K>> phi;    // a nondegenerate functional, when base-field rational
  bool exists() const { return outcome == SearchOutcome::Found; }
};

struct FormSearchLimits {
  std::uint64_t exhaustive_points = 1'000'000;  // p^r bound for F_p enumeration
  std::uint64_t grid_points = 200'000;          // (n+1)^r bound for the grid search
  int probes = 48;
};

/// Gram matrix of phi: G(i, j) = phi(b_i b_j).
template <class K>
Matrix<K> gram_matrix(const Algebra<K>& A, const Vector<K>& phi) {
  Matrix<K> g = zero_matrix<K>(A.dim(), A.dim(), A.field);
  for (const auto& t : A.mult.entries())
    if (!is_zero(phi(t.k))) g(t.i, t.j) += t.c * phi(t.k);
  return g;
}

/// Basis of the functionals phi giving associative forms: all of A* when
/// symmetric is false, those vanishing on [A, A] otherwise.
template <class K>
std::vector<Vector<K>> form_functionals(const Algebra<K>& A, bool symmetric) {
  const int n = A.dim();
  if (!symmetric) {
    std::vector<Vector<K>> all;
    for (int i = 0; i < n; ++i) all.push_back(A.basis_vector(i));
    return all;
  }
  Matrix<K> sys = zero_matrix<K>(n * n, n, A.field);
  for (const auto& t : A.mult.entries()) {
    sys(t.i * n + t.j, t.k) += t.c;
    sys(t.j * n + t.i, t.k) -= t.c;
  }
  return kernel_basis<K>(sys, A.field);
}

namespace detail {

template <class K>
bool invertible(const Matrix<K>& m, const FieldSpec& f) {
  RowEchelon<K> e(static_cast<std::size_t>(m.cols()), f);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (!e.add(m.row(i))) return false;
  return true;
}

// Maps a base-field scalar into an extension field.
inline Gf embed(const Fp& x, const GfContext& ctx) { return Gf::from_base(ctx, x.residue(ctx.p())); }

template <class K>
Matrix<Gf> embed(const Matrix<K>& m, const GfContext& ctx) {
  Matrix<Gf> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = embed(m(i, j), ctx);
  return out;
}

// Calls fn(point) for every point of {0..s-1}^r in lexicographic order until
// fn returns true.
template <class F>
bool for_each_grid_point(std::size_t r, std::uint64_t s, F&& fn) {
  std::vector<std::uint64_t> pt(r, 0);
  while (true) {
    if (fn(pt)) return true;
    std::size_t i = 0;
    while (i < r && ++pt[i] == s) pt[i++] = 0;
    if (i == r) return false;
  }
}

inline std::uint64_t saturating_pow(std::uint64_t b, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / std::max<std::uint64_t>(b, 1)) return cap + 1;
    r *= b;
  }
  return r;
}

}  // namespace detail

/// Searches the family spanned by the given functionals for one whose form
/// is nondegenerate.
///
/// Over F_p the base-field points are enumerated when there are at most
/// limits.exhaustive_points of them, which decides the question exactly.
/// Otherwise (and over Q) a few pseudo-random probes are tried first, then
/// the grid {0..n}^r, which is complete since det is a polynomial of degree
/// at most n in each parameter; over a small prime field the grid lives in an
/// extension field, which is legitimate because being Frobenius does not
/// change under field extension. When even the grid is too large, a failure
/// is reported as NotFound rather than Exhausted.
template <class K>
FormSearchResult<K> search_nondegenerate(const Algebra<K>& A, const std::vector<Vector<K>>& family,
                                         const FormSearchLimits& limits = {}) {
  const int n = A.dim();
  const std::size_t r = family.size();
  FormSearchResult<K> res;
  res.family_dim = r;
  if (n == 0) {
    res.outcome = SearchOutcome::Found;
    res.phi = Vector<K>(0);
    return res;
  }
  if (r == 0) {
    res.outcome = SearchOutcome::Exhausted;
    return res;
  }
  std::vector<Matrix<K>> grams;
  for (const auto& phi : family) grams.push_back(gram_matrix(A, phi));

  auto combine = [&](const std::vector<K>& t) {
    Vector<K> phi = A.zero_vector();
    for (std::size_t i = 0; i < r; ++i)
      if (!is_zero(t[i])) phi += t[i] * family[i];
    return phi;
  };
  auto try_point = [&](const std::vector<K>& t) {
    Matrix<K> g = zero_matrix<K>(n, n, A.field);
    for (std::size_t i = 0; i < r; ++i)
      if (!is_zero(t[i])) g += t[i] * grams[i];
    if (!detail::invertible<K>(g, A.field)) return false;
    res.outcome = SearchOutcome::Found;
    res.phi = combine(t);
    return true;
  };

  const std::uint32_t p = A.field.characteristic();
  if constexpr (std::is_same_v<K, Fp>) {
    if (detail::saturating_pow(p, r, limits.exhaustive_points) <= limits.exhaustive_points) {
      std::vector<K> t(r);
      bool found = detail::for_each_grid_point(r, p, [&](const std::vector<std::uint64_t>& pt) {
        for (std::size_t i = 0; i < r; ++i) t[i] = Fp::raw(static_cast<std::uint32_t>(pt[i]), p);
        return try_point(t);
      });
      if (!found) res.outcome = SearchOutcome::Exhausted;
      return res;
    }
  }

  const auto grid = detail::saturating_pow(static_cast<std::uint64_t>(n) + 1, r, limits.grid_points);
  const bool grid_ok = grid <= limits.grid_points;

  if (A.field.is_rational() || p > static_cast<std::uint32_t>(n)) {
    std::mt19937_64 rng(0x6b6e6f7066ULL);
    std::vector<K> t(r);
    const long range = A.field.is_rational() ? 1'000'003L : static_cast<long>(p);
    for (int probe = 0; probe < limits.probes; ++probe) {
      for (auto& x : t) x = scalar<K>(static_cast<long>(rng() % static_cast<std::uint64_t>(range)), A.field);
      if (try_point(t)) return res;
    }
    if (grid_ok) {
      bool found = detail::for_each_grid_point(r, static_cast<std::uint64_t>(n) + 1,
                                               [&](const std::vector<std::uint64_t>& pt) {
                                                 for (std::size_t i = 0; i < r; ++i)
                                                   t[i] = scalar<K>(static_cast<long>(pt[i]), A.field);
                                                 return try_point(t);
                                               });
      res.outcome = found ? SearchOutcome::Found : SearchOutcome::Exhausted;
    } else {
      res.outcome = SearchOutcome::NotFound;
    }
    return res;
  } else if constexpr (std::is_same_v<K, Fp>) {
    // Small prime: work over F_{p^k} with p^k comfortably above n.
    const int k = std::min(kMaxExtensionDegree, GfContext::degree_exceeding(p, static_cast<std::uint64_t>(n) * 1024));
    const GfContext ctx(p, k);
    std::vector<Matrix<Gf>> ext;
    for (const auto& g : grams) ext.push_back(detail::embed(g, ctx));
    auto try_ext = [&](const std::vector<Gf>& t) {
      Matrix<Gf> g = Matrix<Gf>::Constant(n, n, Gf::from_base(ctx, 0));
      for (std::size_t i = 0; i < r; ++i) g += t[i] * ext[i];
      return detail::invertible<Gf>(g, A.field);
    };
    std::mt19937_64 rng(0x6b6e6f7066ULL);
    std::vector<Gf> t(r);
    for (int probe = 0; probe < limits.probes; ++probe) {
      for (auto& x : t) x = Gf::from_index(ctx, rng() % ctx.size());
      if (try_ext(t)) {
        // The form exists over F_p as well, but this witness is not rational.
        res.outcome = SearchOutcome::Found;
        return res;
      }
    }
    if (grid_ok) {
      bool found = detail::for_each_grid_point(r, static_cast<std::uint64_t>(n) + 1,
                                               [&](const std::vector<std::uint64_t>& pt) {
                                                 for (std::size_t i = 0; i < r; ++i) t[i] = Gf::from_index(ctx, pt[i]);
                                                 return try_ext(t);
                                               });
      res.outcome = found ? SearchOutcome::Found : SearchOutcome::Exhausted;
    } else {
      res.outcome = SearchOutcome::NotFound;
    }
    return res;
  }
  return res;
}

template <class K>
FormSearchResult<K> frobenius_form(const Algebra<K>& A, const FormSearchLimits& limits = {}) {
  return search_nondegenerate(A, form_functionals(A, false), limits);
}

template <class K>
FormSearchResult<K> symmetric_form(const Algebra<K>& A, const FormSearchLimits& limits = {}) {
  return search_nondegenerate(A, form_functionals(A, true), limits);
}

template <class K>
bool is_frobenius(const Algebra<K>& A) {
  return frobenius_form(A).exists();
}
template <class K>
bool is_frobenius(const HopfAlgebra<K>& H) {
  return is_frobenius(H.algebra);
}

template <class K>
bool is_symmetric(const Algebra<K>& A) {
  return symmetric_form(A).exists();
}
template <class K>
bool is_symmetric(const HopfAlgebra<K>& H) {
  return is_symmetric(H.algebra);
}

}  // namespace knopf
