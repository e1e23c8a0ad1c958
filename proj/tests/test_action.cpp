#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace knopf;

namespace {

template <class K>
Matrix<K> span_matrix(const std::vector<Vector<K>>& vs, Eigen::Index n, const FieldSpec& f) {
  Matrix<K> m = zero_matrix<K>(n, static_cast<Eigen::Index>(vs.size()), f);
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
  return m;
}

template <class K>
bool same_span(const std::vector<Vector<K>>& a, const std::vector<Vector<K>>& b, Eigen::Index n, const FieldSpec& f) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Matrix<K> both(n, static_cast<Eigen::Index>(a.size() + b.size()));
  both << span_matrix(a, n, f), span_matrix(b, n, f);
  return rank(both, f) == a.size() && rank(span_matrix(a, n, f), f) == a.size();
}

std::vector<std::vector<std::vector<mpq_class>>> elements_mpq(const MatrixGroup<Rational>& G) {
  std::vector<std::vector<std::vector<mpq_class>>> out;
  for (const auto& g : G.elements()) out.push_back(oracle::to_mpq(g));
  return out;
}

}  // namespace

TEST(Comodule, ConstructionsSatisfyAxioms) {
  const FieldSpec Q = FieldSpec::rationals();
  const auto rep = MatrixGroup<Rational>::generated_by(
      {permutation_matrix<Rational>({1, 2, 0}, Q), permutation_matrix<Rational>({1, 0, 2}, Q)}, Q);
  const auto G = constant_scheme_of(rep);
  const auto V = matrix_group_comodule(rep, G);
  for (const auto& W : {V, dual_comodule(V), direct_sum(V, dual_comodule(V)), tensor(V, V),
                        twist(V, Vector<Rational>(G->one()))})
    EXPECT_TRUE(verify_comodule(W).ok());
  EXPECT_EQ(tensor(V, V).dim(), 9);
}

TEST(Comodule, CorruptedCoactionGivesWitness) {
  const auto G = alpha_scheme(5);
  auto V = alpha_unipotent_module(G);
  std::vector<std::vector<Vector<Fp>>> gamma(2, std::vector<Vector<Fp>>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) gamma[i][j] = V.entry(i, j);
  gamma[0][1](2) += Fp(1, 5);  // a -> a + a^2
  const auto bad = Comodule<Fp>::from_entries(G, gamma);
  const auto rep = verify_comodule(bad);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.witness.empty());
  gamma = std::vector<std::vector<Vector<Fp>>>(2, std::vector<Vector<Fp>>(2, zero_vector<Fp>(G->dim(), G->field())));
  gamma[0][0] = G->one();
  gamma[1][1] = Vector<Fp>(Fp(2, 5) * G->one());
  EXPECT_FALSE(verify_comodule(Comodule<Fp>::from_entries(G, gamma)).counit_ok);
}

TEST(Comodule, DeterminantCharacter) {
  const auto minus = minus_identity_group();
  const auto refl = reflection_group();
  const auto Gm = constant_scheme_of(minus), Gr = constant_scheme_of(refl);
  EXPECT_TRUE(is_trivial_character(*Gm, det_character(matrix_group_comodule(minus, Gm))));
  const auto det_r = det_character(matrix_group_comodule(refl, Gr));
  EXPECT_FALSE(is_trivial_character(*Gr, det_r));
  // on k^G the determinant character is g -> det g
  for (int g = 0; g < refl.order(); ++g) EXPECT_EQ(det_r(g), determinant<Rational>(refl.elements()[g]));
  // V (+) V* always has trivial determinant
  const auto G = mu_semidirect_alpha_scheme(3, 5);
  EXPECT_TRUE(is_trivial_character(*G, det_character(mu_semidirect_alpha_module(G))));
  EXPECT_FALSE(is_trivial_character(*G, det_character(mu_semidirect_alpha_vector(G))));
}

TEST(SymmetricPower, MonomialCountsMatchEnumeration) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 7; ++d) {
      EXPECT_EQ(static_cast<long>(monomial_count(n, d)), oracle::count_monomials(n, d));
      const auto mons = monomials_of_degree(n, d);
      EXPECT_EQ(static_cast<long>(mons.size()), oracle::count_monomials(n, d));
      for (std::size_t i = 1; i < mons.size(); ++i) EXPECT_TRUE(mons[i - 1] > mons[i]);
    }
  EXPECT_EQ(monomial_string({2, 1}, {"x", "y"}), "x^2*y");
}

TEST(SymmetricPower, PowersAreComodules) {
  const auto G = mu_semidirect_alpha_scheme(3, 5);
  SymmetricAlgebra<Fp> S(dual_comodule(mu_semidirect_alpha_module(G)));
  S.prepare(3);
  for (int d = 0; d <= 3; ++d) {
    EXPECT_EQ(S.power(d).dim(), static_cast<int>(monomial_count(4, d)));
    EXPECT_TRUE(verify_comodule(S.power(d)).ok());
  }
}

TEST(SymmetricPower, ConstantGroupPowersMatchSubstitution) {
  // for k^G the action of g on S_d is read off the coaction by evaluating at g
  const auto rep = reflection_group();
  const auto G = constant_scheme_of(rep);
  SymmetricAlgebra<Rational> S(dual_comodule(matrix_group_comodule(rep, G)));
  const auto mats = elements_mpq(rep);
  for (int d = 0; d <= 4; ++d) {
    const auto& P = S.power(d);
    mpq_class trace_sum = 0, oracle_sum = 0;
    for (int g = 0; g < rep.order(); ++g) {
      const Matrix<Rational> act = P.action_matrix(unit_vector<Rational>(G->dim(), g, G->field()));
      for (Eigen::Index i = 0; i < act.rows(); ++i) trace_sum += act(i, i).value();
      const auto sp = oracle::sym_power_matrix(mats[g], d);
      for (std::size_t i = 0; i < sp.size(); ++i) oracle_sum += sp[i][i];
    }
    EXPECT_EQ(trace_sum, oracle_sum) << "degree " << d;
  }
}

TEST(Invariants, KernelAndGeneratorRoutesAgree) {
  std::vector<SchemePtr<Fp>> schemes{alpha_scheme(3), mu_semidirect_alpha_scheme(2, 3), mu_scheme<Fp>(3, FieldSpec::prime(3))};
  for (const auto& G : schemes) {
    // the regular-like module V = W (+) W* only exists for the semidirect
    // product, otherwise use the trivial plus regular coaction on k[G]
    Comodule<Fp> V = G->label().find("x|") != std::string::npos ? mu_semidirect_alpha_module(G)
                                                                 : direct_sum(Comodule<Fp>::trivial(G, 1),
                                                                              Comodule<Fp>::character(G, G->one()));
    if (G->label() == "alpha_3") V = alpha_unipotent_module(G);
    SymmetricAlgebra<Fp> S(dual_comodule(V));
    const auto gens = dual_algebra_generators(*G);
    for (int d = 0; d <= 4; ++d) {
      const auto a = invariants_kernel_route(S.power(d));
      const auto b = invariants_generator_route(S.power(d), gens);
      EXPECT_TRUE(same_span(a, b, static_cast<Eigen::Index>(S.dim(d)), G->field())) << G->label() << " d=" << d;
    }
  }
}

TEST(Invariants, ConstantGroupDimensionsMatchCharacterFormula) {
  const FieldSpec Q = FieldSpec::rationals();
  std::vector<MatrixGroup<Rational>> groups{minus_identity_group(), reflection_group()};
  groups.push_back(MatrixGroup<Rational>::generated_by(
      {permutation_matrix<Rational>({1, 2, 0}, Q), permutation_matrix<Rational>({1, 0, 2}, Q)}, Q));
  groups.push_back(MatrixGroup<Rational>::generated_by({permutation_matrix<Rational>({1, 2, 3, 0}, Q)}, Q));
  for (const auto& rep : groups) {
    const auto G = constant_scheme_of(rep);
    auto S = std::make_shared<SymmetricAlgebra<Rational>>(dual_comodule(matrix_group_comodule(rep, G)));
    GradedInvariantRing<Rational> A(S);
    const auto h = A.hilbert(6);
    const auto mats = elements_mpq(rep);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(h[d], oracle::invariant_dimension(mats, d)) << "degree " << d;
  }
}

TEST(Invariants, WeightRouteMatchesKernelRoute) {
  const FieldSpec Q = FieldSpec::rationals();
  for (int trial = 0; trial < 12; ++trial) {
    const long m = oracle::uniform(2, 5);
    const int n = static_cast<int>(oracle::uniform(1, 3));
    DiagonalizableAction a{{}, m};
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      a.weights.push_back(oracle::uniform(0, m - 1));
      idx.push_back(static_cast<int>(a.weights.back()));
    }
    const auto G = mu_scheme<Rational>(static_cast<int>(m), Q);
    SymmetricAlgebra<Rational> S(dual_comodule(diagonal_comodule(G, idx)));
    for (int d = 0; d <= 5; ++d) {
      const auto kernel = invariants_kernel_route(S.power(d));
      std::vector<Vector<Rational>> mons;
      for (int q : weight_invariant_monomials(a, d))
        mons.push_back(unit_vector<Rational>(static_cast<Eigen::Index>(S.dim(d)), q, Q));
      EXPECT_TRUE(same_span(kernel, mons, static_cast<Eigen::Index>(S.dim(d)), Q)) << "trial " << trial << " d=" << d;
      EXPECT_EQ(static_cast<long>(mons.size()), oracle::count_weight_zero(a.weights, m, d));
    }
  }
}

TEST(Invariants, TwistedInvariantsOfCharacters) {
  // (S_d (x) chi)^G for mu_3 with weights (1, 1): S = Sym V* has weights
  // -1, so a monomial x^e survives iff sum_i w_i e_i = chi mod 3
  const DiagonalizableAction a{{1, 1}, 3};
  for (long shift = 0; shift < 3; ++shift) {
    const auto h = weight_hilbert_function(a, 8, shift);
    for (int d = 0; d <= 8; ++d) EXPECT_EQ(h[d], oracle::count_weight_zero(a.weights, 3, d, -shift));
  }
}

TEST(Invariants, AlphaUnipotentInvariants) {
  const auto G = alpha_scheme(5);
  SymmetricAlgebra<Fp> S(dual_comodule(alpha_unipotent_module(G)));
  // y and x^p generate; dim A_d = 1 + floor(d / p) for d >= 0
  for (int d = 0; d <= 11; ++d) EXPECT_EQ(static_cast<int>(invariants(S.power(d)).size()), 1 + d / 5) << d;
}
