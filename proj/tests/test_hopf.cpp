#include "oracles.hpp"

#include "knopf/frobenius.hpp"

#include <gtest/gtest.h>

using namespace knopf;

namespace {

// x is a left (right) integral iff h x = eps(h) x (x h = eps(h) x) for every
// basis element h; checked by direct multiplication.
template <class K>
bool is_integral(const HopfAlgebra<K>& H, const Vector<K>& x, Side side) {
  for (int i = 0; i < H.dim(); ++i) {
    const Vector<K> h = H.algebra.basis_vector(i);
    const Vector<K> prod = side == Side::Left ? H.multiply(h, x) : H.multiply(x, h);
    if (!equal<K>(prod, Vector<K>(H.counit(i) * x))) return false;
  }
  return true;
}

template <class K>
Tensor3<K> bump_entry(const Tensor3<K>& t, std::size_t which, const K& delta) {
  auto entries = t.entries();
  entries[which % entries.size()].c += delta;
  return Tensor3<K>(t.dim(), entries);
}

template <class K>
std::vector<HopfAlgebra<K>> group_algebras(const FieldSpec& f) {
  std::vector<HopfAlgebra<K>> out;
  for (const auto& G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                        FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)}) {
    out.push_back(group_algebra<K>(G, f));
    out.push_back(function_algebra<K>(G, f));
  }
  return out;
}

}  // namespace

TEST(Group, TablesAreGroups) {
  for (const auto& G : {FiniteGroup::cyclic(5), FiniteGroup::dihedral(4), FiniteGroup::symmetric(4),
                        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))}) {
    const int n = G.order();
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(G.mul(a, G.identity()), a);
      EXPECT_EQ(G.mul(a, G.inverse(a)), G.identity());
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
    }
  }
  EXPECT_EQ(FiniteGroup::dihedral(4).order(), 8);
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24);
}

TEST(Hopf, StandardConstructionsSatisfyAxioms) {
  for (const auto& H : group_algebras<Rational>(FieldSpec::rationals())) {
    EXPECT_TRUE(verify_axioms(H).ok());
    EXPECT_TRUE(verify_axioms(dual(H)).ok());
  }
  for (std::uint32_t p : {2u, 3u, 5u})
    for (const auto& H : group_algebras<Fp>(FieldSpec::prime(p))) EXPECT_TRUE(verify_axioms(H).ok());
}

TEST(Hopf, DoubleDualIsTheOriginal) {
  for (const auto& H : group_algebras<Rational>(FieldSpec::rationals()))
    EXPECT_TRUE(structurally_equal(H, dual(dual(H))));
  const auto U = restricted_enveloping(affine_line_lie_algebra(3));
  EXPECT_TRUE(structurally_equal(U, dual(dual(U))));
}

TEST(Hopf, GroupAlgebraDualIsFunctionAlgebra) {
  const auto G = FiniteGroup::symmetric(3);
  const auto kg = group_algebra<Rational>(G, FieldSpec::rationals());
  const auto fg = function_algebra<Rational>(G, FieldSpec::rationals());
  const auto d = dual(kg);
  EXPECT_TRUE(d.algebra.mult == fg.algebra.mult);
  EXPECT_TRUE(d.comult == fg.comult);
}

TEST(Hopf, TensorProductSatisfiesAxioms) {
  const FieldSpec f = FieldSpec::prime(2);
  const auto H = tensor_product(group_algebra<Fp>(FiniteGroup::cyclic(2), f),
                                restricted_enveloping(abelian_lie_algebra(2, 1)));
  EXPECT_EQ(H.dim(), 4);
  EXPECT_TRUE(verify_axioms(H).ok());
}

TEST(Hopf, AntipodeIsSolvedWhenMissing) {
  const auto U = restricted_enveloping(affine_line_lie_algebra(3));
  const Matrix<Fp> S = solve_antipode(U.algebra, U.comult, U.counit);
  EXPECT_TRUE(equal<Fp>(S, U.antipode));
}

TEST(Hopf, CorruptedEntriesAreReportedWithAWitness) {
  const FieldSpec f = FieldSpec::prime(5);
  const auto base = group_algebra<Fp>(FiniteGroup::symmetric(3), f);
  for (std::size_t which = 0; which < 12; ++which) {
    auto H = base;
    H.algebra.mult = bump_entry(H.algebra.mult, which * 3 + 1, Fp(1, 5));
    const AxiomReport r = verify_axioms(H);
    ASSERT_FALSE(r.ok());
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_FALSE(r.first_failure()->witness.empty());
  }
  for (std::size_t which = 0; which < 6; ++which) {
    auto H = base;
    H.comult = bump_entry(H.comult, which, Fp(2, 5));
    EXPECT_FALSE(verify_axioms(H).ok());
  }
  auto H = base;
  H.antipode(0, 1) += Fp(1, 5);
  const AxiomReport r = verify_axioms(H);
  EXPECT_FALSE(r.passed("antipode"));
  H = base;
  H.counit(2) = Fp(0, 5);
  EXPECT_FALSE(verify_axioms(H).ok());
}

TEST(Integrals, MatchTheDefiningEquations) {
  std::vector<HopfAlgebra<Fp>> hs = group_algebras<Fp>(FieldSpec::prime(3));
  for (std::uint32_t p : {2u, 3u, 5u}) {
    hs.push_back(restricted_enveloping(affine_line_lie_algebra(p)));
    hs.push_back(dual(hs.back()));
    hs.push_back(mu_semidirect_alpha_algebra(3, p));
  }
  for (const auto& H : hs) {
    const auto l = integrals(H, Side::Left).generator();
    const auto r = integrals(H, Side::Right).generator();
    EXPECT_TRUE(is_integral(H, l, Side::Left));
    EXPECT_TRUE(is_integral(H, r, Side::Right));
    EXPECT_FALSE(is_zero<Fp>(Matrix<Fp>(l)));
    EXPECT_EQ(is_unimodular(H), is_integral(H, l, Side::Right));
  }
}

TEST(Integrals, BrokenDataDoesNotGiveALine) {
  // zero multiplication and zero counit: every element is an integral
  const FieldSpec f = FieldSpec::rationals();
  auto H = group_algebra<Rational>(FiniteGroup::cyclic(2), f);
  H.algebra.mult = Tensor3<Rational>(2, {});
  H.counit = zero_vector<Rational>(2, f);
  EXPECT_THROW(integrals(H, Side::Left), InconsistencyError);
}

TEST(Integrals, GroupAndFunctionAlgebrasAreUnimodular) {
  for (const auto& H : group_algebras<Rational>(FieldSpec::rationals())) EXPECT_TRUE(is_unimodular(H));
  for (const auto& H : group_algebras<Fp>(FieldSpec::prime(2))) EXPECT_TRUE(is_unimodular(H));
}

TEST(RestrictedLie, EnvelopingAlgebraRelations) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto L = affine_line_lie_algebra(p);
    EXPECT_TRUE(check_restricted_lie(L).ok);
    const auto U = restricted_enveloping(L);
    ASSERT_EQ(U.dim(), static_cast<int>(p * p));
    EXPECT_TRUE(verify_axioms(U).ok());
    const FieldSpec f = FieldSpec::prime(p);
    const Vector<Fp> e = unit_vector<Fp>(U.dim(), 1, f), fv = unit_vector<Fp>(U.dim(), p, f);
    // [f, e] = e
    EXPECT_TRUE(equal<Fp>(Vector<Fp>(U.multiply(fv, e) - U.multiply(e, fv)), e));
    // e^p = 0 and f^p = f
    Vector<Fp> ep = U.unit(), fp = U.unit();
    for (std::uint32_t i = 0; i < p; ++i) {
      ep = U.multiply(ep, e);
      fp = U.multiply(fp, fv);
    }
    EXPECT_TRUE(is_zero<Fp>(Matrix<Fp>(ep)));
    EXPECT_TRUE(equal<Fp>(fp, fv));
  }
}

TEST(RestrictedLie, JacobsonConditionIsChecked) {
  auto L = affine_line_lie_algebra(3);
  L.pmap[0] = {0, 1};  // e^[p] = f breaks (ad e)^p = ad(e^[p])
  EXPECT_FALSE(check_restricted_lie(L).ok);
}

TEST(RestrictedLie, ModularElementIsAnAlgebraMap) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto U = restricted_enveloping(affine_line_lie_algebra(p));
    const Vector<Fp> a = modular_element(U);
    for (int i = 0; i < U.dim(); ++i)
      for (int j = 0; j < U.dim(); ++j) {
        const Vector<Fp> prod = U.multiply(U.algebra.basis_vector(i), U.algebra.basis_vector(j));
        Fp lhs(0, p);
        for (int k = 0; k < U.dim(); ++k) lhs += a(k) * prod(k);
        EXPECT_EQ(lhs, a(i) * a(j));
      }
    EXPECT_TRUE(is_zero(a(1)));       // alpha(e) = 0
    EXPECT_EQ(a(p), Fp(1, p));        // alpha(f) = 1
  }
}

TEST(Frobenius, FoundFormsAreNondegenerateAndSymmetric) {
  for (const auto& H : group_algebras<Rational>(FieldSpec::rationals())) {
    const auto res = symmetric_form(H.algebra);
    ASSERT_TRUE(res.exists());
    ASSERT_TRUE(res.phi.has_value());
    const int n = H.dim();
    std::vector<std::vector<mpq_class>> gram(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vector<Rational> ij = H.multiply(H.algebra.basis_vector(i), H.algebra.basis_vector(j));
        const Vector<Rational> ji = H.multiply(H.algebra.basis_vector(j), H.algebra.basis_vector(i));
        Rational a(0), b(0);
        for (int k = 0; k < n; ++k) {
          a += (*res.phi)(k) * ij(k);
          b += (*res.phi)(k) * ji(k);
        }
        EXPECT_EQ(a, b);
        gram[i][j] = a.value();
      }
    EXPECT_NE(oracle::det_laplace(gram), 0);
  }
}

TEST(Frobenius, NoSymmetricFormOnUlByEnumeration) {
  // all 16 functionals on u(L), p = 2, checked for a symmetric nondegenerate form
  const auto U = restricted_enveloping(affine_line_lie_algebra(2));
  int symmetric_nondegenerate = 0, nondegenerate = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<long>> gram(4, std::vector<long>(4));
    bool sym = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const auto ij = U.multiply(U.algebra.basis_vector(i), U.algebra.basis_vector(j));
        const auto ji = U.multiply(U.algebra.basis_vector(j), U.algebra.basis_vector(i));
        long a = 0, b = 0;
        for (int k = 0; k < 4; ++k)
          if (mask >> k & 1) {
            a += ij(k).value();
            b += ji(k).value();
          }
        gram[i][j] = a % 2;
        sym = sym && a % 2 == b % 2;
      }
    if (oracle::rank_mod_p(gram, 2) == 4) {
      ++nondegenerate;
      if (sym) ++symmetric_nondegenerate;
    }
  }
  EXPECT_GT(nondegenerate, 0);
  EXPECT_EQ(symmetric_nondegenerate, 0);
  const auto res = symmetric_form(U.algebra);
  EXPECT_EQ(res.outcome, SearchOutcome::Exhausted);
  EXPECT_TRUE(frobenius_form(U.algebra).exists());
}

TEST(Frobenius, SymmetricEqualsUnimodularOnCocommutativeAlgebras) {
  std::vector<HopfAlgebra<Fp>> hs;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const auto& G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)})
      hs.push_back(group_algebra<Fp>(G, FieldSpec::prime(p)));
    hs.push_back(restricted_enveloping(affine_line_lie_algebra(p)));
    hs.push_back(restricted_enveloping(abelian_lie_algebra(p, 2)));
    hs.push_back(dual(mu_semidirect_alpha_algebra(2, p)));
  }
  for (const auto& H : hs) {
    ASSERT_TRUE(H.is_cocommutative());
    const auto res = symmetric_form(H.algebra);
    ASSERT_NE(res.outcome, SearchOutcome::NotFound);
    EXPECT_EQ(res.exists(), is_unimodular(H));
  }
}
