#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace knopf;

namespace {

template <class K>
void expect_routes_agree(const FiniteGroupScheme<K>& G) {
  const Vector<K> adj = knop_character_adjoint_route(G);
  const Vector<K> mod = knop_character_via_modular(G);
  EXPECT_TRUE(equal<K>(adj, mod)) << G.label();
  EXPECT_TRUE(is_grouplike(G, adj)) << G.label();
  EXPECT_EQ(is_trivial_character(G, adj), is_unimodular(G.dual())) << G.label();
}

std::vector<SchemePtr<Fp>> modular_schemes() {
  std::vector<SchemePtr<Fp>> out;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::prime(p);
    out.push_back(alpha_scheme(p));
    out.push_back(mu_scheme<Fp>(static_cast<int>(p), f));
    out.push_back(mu_scheme<Fp>(4, f));
    out.push_back(constant_group_scheme<Fp>(FiniteGroup::symmetric(3), f, "S3"));
    out.push_back(restricted_lie_scheme(affine_line_lie_algebra(p), "u(L)*"));
    out.push_back(mu_semidirect_alpha_scheme(2, p));
    out.push_back(mu_semidirect_alpha_scheme(3, p));
  }
  out.push_back(direct_product(*mu_scheme<Fp>(2, FieldSpec::prime(2)), *alpha_scheme(2)));
  out.push_back(mu_semidirect_cyclic_scheme<Fp>(3, 2, 2, FieldSpec::prime(3)));
  return out;
}

}  // namespace

TEST(Scheme, RejectsNoncommutativeCoordinateRings) {
  EXPECT_THROW(make_scheme(group_algebra<Rational>(FiniteGroup::symmetric(3), FieldSpec::rationals())),
               InconsistencyError);
}

TEST(Scheme, GrouplikesOfFunctionAlgebraAreCharacters) {
  // the grouplikes of k^G are the characters G -> k^x; for S_3 over Q these
  // are the trivial and sign characters
  const auto G = constant_group_scheme<Rational>(FiniteGroup::symmetric(3), FieldSpec::rationals());
  const Vector<Rational> one = G->one();
  EXPECT_TRUE(is_grouplike(*G, one));
  Vector<Rational> sign(6);
  const auto& S3 = FiniteGroup::symmetric(3);
  // the sign is determined by the parity of a cycle decomposition; use the
  // fact that elements of order 2 are odd
  for (int g = 0; g < 6; ++g) sign(g) = Rational(g != S3.identity() && S3.mul(g, g) == S3.identity() ? -1 : 1);
  EXPECT_TRUE(is_grouplike(*G, sign));
  EXPECT_EQ(grouplike_inverse(*G, sign), sign);
  EXPECT_FALSE(is_grouplike(*G, Vector<Rational>(2 * sign)));
}

TEST(Knop, RoutesAgreeOnEveryScheme) {
  for (const auto& G : modular_schemes()) expect_routes_agree(*G);
  for (int n : {1, 2, 3, 5}) expect_routes_agree(*mu_scheme<Rational>(n, FieldSpec::rationals()));
  expect_routes_agree(*constant_group_scheme<Rational>(FiniteGroup::dihedral(4), FieldSpec::rationals()));
}

TEST(Knop, TrivialOnConstantAbelianAndLinearlyReductiveCases) {
  std::vector<SchemePtr<Fp>> trivial;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec f = FieldSpec::prime(p);
    trivial.push_back(constant_group_scheme<Fp>(FiniteGroup::dihedral(4), f));
    trivial.push_back(alpha_scheme(p));
    for (int n : {2, 3, 4, 6}) trivial.push_back(mu_scheme<Fp>(n, f));
  }
  trivial.push_back(direct_product(*mu_scheme<Fp>(2, FieldSpec::prime(2)), *alpha_scheme(2)));
  trivial.push_back(mu_semidirect_cyclic_scheme<Fp>(3, 2, 2, FieldSpec::prime(3)));
  trivial.push_back(mu_semidirect_cyclic_scheme<Fp>(5, 4, 2, FieldSpec::prime(5)));
  trivial.push_back(mu_semidirect_cyclic_scheme<Fp>(2, 3, 1, FieldSpec::prime(2)));
  for (const auto& G : trivial) EXPECT_TRUE(equal<Fp>(knop_character(*G), G->one())) << G->label();
}

TEST(Knop, RestrictedEnvelopingDualIsNontrivial) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto G = restricted_lie_scheme(affine_line_lie_algebra(p));
    EXPECT_FALSE(is_trivial_character(*G, knop_character(*G)));
    // the abelian case is unimodular, so its Knop character is trivial
    const auto A = restricted_lie_scheme(abelian_lie_algebra(p, 2));
    EXPECT_TRUE(is_trivial_character(*A, knop_character(*A)));
  }
}

// Regression for the sign and inverse conventions: for mu_l x| alpha_p with
// Delta(a) = t (x) a + a (x) 1 the character is t^((p-1) mod l).
TEST(Knop, SemidirectConventionRegression) {
  const auto G = mu_semidirect_alpha_scheme(3, 5);
  EXPECT_EQ(format_element(G->gamma(), knop_character(*G)), "t");
  for (int l = 2; l <= 5; ++l)
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      if (l * p > 40) continue;
      const auto S = mu_semidirect_alpha_scheme(l, p);
      const int e = mu_semidirect_alpha_lambda_exponent(l, p);
      Vector<Fp> expected = S->one();
      const Vector<Fp> t = unit_vector<Fp>(S->dim(), static_cast<Eigen::Index>(p), S->field());
      for (int i = 0; i < e; ++i) expected = S->gamma().multiply(expected, t);
      EXPECT_TRUE(equal<Fp>(knop_character(*S), expected)) << "l=" << l << " p=" << p;
      EXPECT_EQ(is_trivial_character(*S, knop_character(*S)), (p - 1) % l == 0) << "l=" << l << " p=" << p;
    }
}

TEST(Scheme, DirectProductDimensionsMultiply) {
  const auto G = direct_product(*mu_scheme<Fp>(3, FieldSpec::prime(3)), *alpha_scheme(3));
  EXPECT_EQ(G->dim(), 9);
  EXPECT_TRUE(verify_axioms(G->gamma()).ok());
  EXPECT_TRUE(G->gamma().is_cocommutative());
}

TEST(Scheme, SemidirectCyclicRejectsBadAction) {
  EXPECT_THROW(mu_semidirect_cyclic_scheme<Fp>(3, 3, 2, FieldSpec::prime(3)), std::invalid_argument);
}
