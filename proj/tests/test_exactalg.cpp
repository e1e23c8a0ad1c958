#include "oracles.hpp"

#include "knopf/extension_field.hpp"

#include <gtest/gtest.h>

using namespace knopf;

namespace {

Matrix<Fp> random_fp(int r, int c, std::uint32_t p, std::vector<std::vector<long>>& raw) {
  Matrix<Fp> m(r, c);
  raw.assign(r, std::vector<long>(c));
  // low-rank structure now and then, so kernels are not always trivial
  const bool low = oracle::uniform(0, 2) == 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      raw[i][j] = low && i >= 2 ? (raw[0][j] * (i + 1) + raw[1][j]) % p : oracle::uniform(0, p - 1);
      m(i, j) = Fp(raw[i][j], p);
    }
  return m;
}

}  // namespace

TEST(FieldSpec, ParsesAndPrints) {
  EXPECT_TRUE(FieldSpec::parse("Q").is_rational());
  EXPECT_EQ(FieldSpec::parse("Fp:5").characteristic(), 5u);
  EXPECT_EQ(FieldSpec::parse("F7").characteristic(), 7u);
  EXPECT_EQ(FieldSpec::prime(11).str(), "Fp:11");
  EXPECT_THROW(FieldSpec::parse("Fp:6"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("R"), std::invalid_argument);
}

TEST(Rational, ArithmeticAndParsing) {
  const Rational a = Rational::parse("3/6"), b = Rational::parse("-2");
  EXPECT_EQ(a.str(), "1/2");
  EXPECT_EQ((a + b).str(), "-3/2");
  EXPECT_EQ((a * b).str(), "-1");
  EXPECT_EQ((a / b).str(), "-1/4");
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("x"), std::exception);
}

TEST(Fp, AgreesWithIntegerArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 65521u})
    for (int trial = 0; trial < 200; ++trial) {
      const long x = oracle::uniform(-1000, 1000), y = oracle::uniform(-1000, 1000);
      const auto mod = [p](long v) { return static_cast<std::uint32_t>(((v % static_cast<long>(p)) + p) % p); };
      const Fp a(x, p), b(y, p);
      EXPECT_EQ((a + b).value(), mod(x + y));
      EXPECT_EQ((a - b).value(), mod(x - y));
      EXPECT_EQ((a * b).value(), mod(x * y));
      if (mod(y) != 0) {
        EXPECT_EQ((a / b * b).value(), mod(x));
      }
    }
  EXPECT_THROW(Fp(0, 5).inverse(), std::exception);
}

TEST(Fp, LiteralsBindToThePrime) {
  const Fp three(3, 5);
  EXPECT_EQ((three + Fp(4)).value(), 2u);
  EXPECT_EQ((three * Fp(1)).value(), 3u);
}

TEST(ExtensionField, FieldAxiomsOnSamples) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, int>>{{2, 3}, {3, 2}, {5, 2}, {2, 5}}) {
    GfContext ctx(p, k);
    const std::uint64_t q = ctx.size();
    for (std::uint64_t i = 1; i < q; ++i) {
      const Gf x = Gf::from_index(ctx, i);
      EXPECT_EQ(x * x.inverse(), Gf::from_base(ctx, 1));
    }
    // x^q = x for every element
    for (std::uint64_t i = 0; i < q; ++i) {
      const Gf x = Gf::from_index(ctx, i);
      Gf y = Gf::from_base(ctx, 1);
      for (std::uint64_t e = 0; e < q; ++e) y *= x;
      EXPECT_EQ(y, x);
    }
  }
}

TEST(Matrix, RankAndKernelOverFpMatchOracle) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    const int r = static_cast<int>(oracle::uniform(1, 9)), c = static_cast<int>(oracle::uniform(1, 9));
    std::vector<std::vector<long>> raw;
    const Matrix<Fp> m = random_fp(r, c, p, raw);
    const FieldSpec f = FieldSpec::prime(p);
    const int expected = oracle::rank_mod_p(raw, p);
    EXPECT_EQ(static_cast<int>(rank(m, f)), expected);
    const auto ker = kernel_basis(m, f);
    EXPECT_EQ(static_cast<int>(ker.size()), c - expected);
    for (const auto& v : ker) EXPECT_TRUE(is_zero<Fp>(Matrix<Fp>(m * v)));
    if (!ker.empty()) {
      Matrix<Fp> kmat(c, static_cast<Eigen::Index>(ker.size()));
      for (std::size_t i = 0; i < ker.size(); ++i) kmat.col(static_cast<Eigen::Index>(i)) = ker[i];
      EXPECT_EQ(rank(kmat, f), ker.size());
    }
  }
}

TEST(Matrix, RankAndKernelOverQMatchOracle) {
  for (int trial = 0; trial < 40; ++trial) {
    const int r = static_cast<int>(oracle::uniform(1, 7)), c = static_cast<int>(oracle::uniform(1, 7));
    Matrix<Rational> m(r, c);
    std::vector<std::vector<mpq_class>> raw(r, std::vector<mpq_class>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        raw[i][j] = mpq_class(oracle::uniform(-4, 4), oracle::uniform(1, 3));
        if (trial % 3 == 0 && i == r - 1 && r > 1) raw[i][j] = raw[0][j] * 2 - raw[i > 1 ? 1 : 0][j];
        m(i, j) = Rational(raw[i][j]);
      }
    const int expected = oracle::rank_q(raw);
    EXPECT_EQ(static_cast<int>(rank(m, FieldSpec::rationals())), expected);
    const auto ker = kernel_basis(m, FieldSpec::rationals());
    EXPECT_EQ(static_cast<int>(ker.size()), c - expected);
    for (const auto& v : ker) EXPECT_TRUE(is_zero<Rational>(Matrix<Rational>(m * v)));
  }
}

TEST(Matrix, SolveFindsSolutionsOrReportsNone) {
  const FieldSpec f = FieldSpec::prime(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<long>> raw;
    const Matrix<Fp> m = random_fp(4, 5, 7, raw);
    Vector<Fp> x(5);
    for (int i = 0; i < 5; ++i) x(i) = Fp(oracle::uniform(0, 6), 7);
    const Vector<Fp> b = m * x;
    const auto sol = solve(m, b, f);
    ASSERT_TRUE(sol.has_value());
    EXPECT_TRUE(equal<Fp>(Matrix<Fp>(m * *sol), Matrix<Fp>(b)));
  }
  Matrix<Fp> z = zero_matrix<Fp>(2, 2, f);
  Vector<Fp> b = unit_vector<Fp>(2, 0, f);
  EXPECT_FALSE(solve(z, b, f).has_value());
}

TEST(Matrix, KroneckerMatchesDefinition) {
  const FieldSpec f = FieldSpec::prime(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<long>> ra, rb;
    const Matrix<Fp> a = random_fp(2, 3, 5, ra), b = random_fp(3, 2, 5, rb);
    const Matrix<Fp> k = kronecker(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 6);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j)
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 2; ++s) EXPECT_EQ(k(i * 3 + r, j * 2 + s), a(i, j) * b(r, s));
  }
  (void)f;
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(oracle::uniform(1, 5));
    Matrix<Rational> m(n, n);
    std::vector<std::vector<mpq_class>> raw(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        raw[i][j] = oracle::uniform(-3, 3);
        m(i, j) = Rational(raw[i][j]);
      }
    EXPECT_EQ(determinant<Rational>(m).value(), oracle::det_laplace(raw));
  }
}

TEST(Poly, DivisionAndGcd) {
  const Poly a({Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  const Poly b({Rational(1), Rational(1)});                // t + 1
  auto [q, r] = Poly::divmod(a, b);
  EXPECT_EQ(q, Poly({Rational(-1), Rational(1)}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(Poly::gcd(a, Poly::one_minus_t_power(1)), Poly({Rational(-1), Rational(1)}));
  EXPECT_TRUE(Poly({Rational(1), Rational(2), Rational(1)}).is_palindromic());
  EXPECT_FALSE(Poly({Rational(1), Rational(2)}).is_palindromic());
  EXPECT_THROW(Poly::divmod(a, Poly()), std::exception);
}

TEST(Poly, InterpolationRecoversPolynomials) {
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i <= trial % 5; ++i) c.emplace_back(oracle::uniform(-5, 5));
    const Poly p(c);
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= 5; ++i) {
      xs.emplace_back(i);
      ys.push_back(p.eval(Rational(i)));
    }
    EXPECT_EQ(Poly::interpolate(xs, ys), p);
  }
}

TEST(RationalFunction, SeriesMatchesLongDivision) {
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> n, d{Rational(1)};
    std::vector<mpq_class> nq, dq{1};
    for (int i = 0; i < 3; ++i) {
      n.emplace_back(oracle::uniform(-3, 3));
      nq.push_back(n.back().value());
      d.emplace_back(oracle::uniform(-2, 2));
      dq.push_back(d.back().value());
    }
    const RationalFunction h{Poly(n), Poly(d)};
    const auto inv = oracle::inverse_series(dq, 12);
    const auto got = h.series(12);
    for (int k = 0; k < 12; ++k) {
      mpq_class want = 0;
      for (int i = 0; i <= k && i < 3; ++i) want += nq[i] * inv[k - i];
      EXPECT_EQ(got[k].value(), want) << "coefficient " << k;
    }
  }
}

TEST(RationalFunction, NormalizesAndReportsDegree) {
  const RationalFunction h(Poly({Rational(1), Rational(1)}), Poly::one_minus_t_power(2));
  EXPECT_EQ(h, RationalFunction(Poly(1), Poly::one_minus_t_power(1)));
  EXPECT_EQ(h.degree(), -1);
}
