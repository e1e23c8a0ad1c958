#pragma once

// Named example objects with their expected outcomes. Each entry builds its
// Hopf algebras, schemes and actions, runs the relevant checks and compares
// against the frozen expectations.

#include "knopf/json_io.hpp"

#include <map>

namespace knopf {

using CatalogParams = std::map<std::string, long>;

/// One compared outcome. `source` says where the expected value comes from:
/// "example" (a published example), "computed" (an independent computation
/// frozen as data) or "immediate" (follows directly from the definitions).
struct Expectation {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok = false;
  std::string source;
};

struct CatalogResult {
  std::string name;
  CatalogParams params;
  std::vector<Expectation> checks;
  std::vector<std::string> warnings;
  Json details = Json::object();

  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Expectation* find(const std::string& what) const {
    for (const auto& c : checks)
      if (c.what == what) return &c;
    return nullptr;
  }
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  CatalogParams defaults;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Runs an entry. Unknown names or parameters throw std::invalid_argument.
CatalogResult run_catalog(const std::string& name, const CatalogParams& params = {}, int jobs = 1);

/// The entry's scheme and module in the input JSON formats:
/// {"scheme": ..., "module": ...} (either may be absent).
Json catalog_export(const std::string& name, const CatalogParams& params = {});

Json to_json(const CatalogResult& r);

// ---------------------------------------------------------------------------
// Builders shared with the tests

/// <-I> in GL_2(Q).
MatrixGroup<Rational> minus_identity_group();
/// <diag(1,-1)> in GL_2(Q).
MatrixGroup<Rational> reflection_group();
/// The matrix sending e_j to e_{perm[j]}.
template <class K>
Matrix<K> permutation_matrix(const std::vector<int>& perm, const FieldSpec& f) {
  const int n = static_cast<int>(perm.size());
  Matrix<K> m = zero_matrix<K>(n, n, f);
  for (int j = 0; j < n; ++j) m(perm[j], j) = scalar<K>(1, f);
  return m;
}

/// The restricted Lie algebra with [f,e] = e, e^[p] = 0, f^[p] = f, and u(L).
HopfAlgebra<Fp> ul_algebra(std::uint32_t p);

/// W = k^2 with the matrix [[t, a], [0, 1]] of coordinate functions.
Comodule<Fp> mu_semidirect_alpha_vector(const SchemePtr<Fp>& G);
/// V = W (+) W*.
Comodule<Fp> mu_semidirect_alpha_module(const SchemePtr<Fp>& G);

/// alpha_p acting on k^2 through [[1, a], [0, 1]].
Comodule<Fp> alpha_unipotent_module(const SchemePtr<Fp>& G);

/// G_m acting with weight +1 on n coordinates and -1 on m coordinates; the
/// invariants form the t = 2 determinantal ring in degrees doubled.
DiagonalizableAction determinantal_action(int m, int n);
Poly determinantal_denominator(int m, int n);

/// The action of r = diag(1,-1) on antisymmetric 2 x 2 matrices, B -> r B r^T.
Matrix<Rational> o2_lie_action();

/// Expected exponent of the Knop character t^e of mu_l x| alpha_p.
inline int mu_semidirect_alpha_lambda_exponent(int l, std::uint32_t p) {
  return static_cast<int>((p - 1) % static_cast<std::uint32_t>(l));
}

}  // namespace knopf
