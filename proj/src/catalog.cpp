#include "knopf/catalog.hpp"

#include "knopf/frobenius.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

namespace knopf {

// ---------------------------------------------------------------------------
// Builders

namespace {

Matrix<Rational> rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Matrix<Rational> m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

template <class K>
Matrix<K> integer_matrix(const std::vector<std::vector<long>>& rows, const FieldSpec& f) {
  Matrix<K> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = scalar<K>(rows[i][j], f);
  return m;
}

}  // namespace

MatrixGroup<Rational> minus_identity_group() {
  return MatrixGroup<Rational>::generated_by({rational_matrix({{-1, 0}, {0, -1}})}, FieldSpec::rationals());
}

MatrixGroup<Rational> reflection_group() {
  return MatrixGroup<Rational>::generated_by({rational_matrix({{1, 0}, {0, -1}})}, FieldSpec::rationals());
}

HopfAlgebra<Fp> ul_algebra(std::uint32_t p) { return restricted_enveloping(affine_line_lie_algebra(p)); }

Comodule<Fp> mu_semidirect_alpha_vector(const SchemePtr<Fp>& G) {
  const auto& A = G->gamma().algebra;
  const int p = static_cast<int>(G->field().characteristic());
  const Vector<Fp> t = A.basis_vector(p), a = A.basis_vector(1);
  return Comodule<Fp>::from_entries(G, {{t, a}, {A.zero_vector(), G->one()}});
}

Comodule<Fp> mu_semidirect_alpha_module(const SchemePtr<Fp>& G) {
  const Comodule<Fp> W = mu_semidirect_alpha_vector(G);
  return direct_sum(W, dual_comodule(W));
}

Comodule<Fp> alpha_unipotent_module(const SchemePtr<Fp>& G) {
  const auto& A = G->gamma().algebra;
  return Comodule<Fp>::from_entries(G, {{G->one(), A.basis_vector(1)}, {A.zero_vector(), G->one()}});
}

DiagonalizableAction determinantal_action(int m, int n) {
  DiagonalizableAction a;
  for (int i = 0; i < n; ++i) a.weights.push_back(1);
  for (int i = 0; i < m; ++i) a.weights.push_back(-1);
  return a;
}

Poly determinantal_denominator(int m, int n) { return Poly::one_minus_t_power(2).pow(m + n - 1); }

Matrix<Rational> o2_lie_action() {
  // so(2) is spanned by E = [[0, 1], [-1, 0]]; record r E r^T in that basis
  const Matrix<Rational> r = rational_matrix({{1, 0}, {0, -1}});
  const Matrix<Rational> E = rational_matrix({{0, 1}, {-1, 0}});
  const Matrix<Rational> image = r * E * r.transpose();
  Matrix<Rational> out(1, 1);
  out(0, 0) = image(0, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Checking helpers

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

template <class T>
std::string join(const std::vector<T>& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += ",";
    if constexpr (std::is_arithmetic_v<T>)
      s += std::to_string(x);
    else
      s += x;
  }
  return s;
}

struct Checker {
  CatalogResult& r;

  void check(std::string what, bool ok, std::string expected, std::string actual, std::string source) {
    r.checks.push_back({std::move(what), std::move(expected), std::move(actual), ok, std::move(source)});
  }
  void flag(std::string what, bool expected, bool actual, std::string source) {
    check(std::move(what), expected == actual, yes_no(expected), yes_no(actual), std::move(source));
  }
  void number(std::string what, long expected, long actual, std::string source) {
    check(std::move(what), expected == actual, std::to_string(expected), std::to_string(actual), std::move(source));
  }
  void text(std::string what, const std::string& expected, const std::string& actual, std::string source) {
    check(std::move(what), expected == actual, expected, actual, std::move(source));
  }
  void seq(std::string what, const std::vector<long>& expected, const std::vector<long>& actual, std::string source) {
    check(std::move(what), expected == actual, join(expected), join(actual), std::move(source));
  }
};

long param(const CatalogParams& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter " + key);
  return it->second;
}

FieldSpec field_param(long p) {
  if (p == 0) return FieldSpec::rationals();
  if (p < 2) throw std::invalid_argument("p must be 0 (for Q) or a prime");
  return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

template <class K>
struct HopfFacts {
  bool axioms = false;
  std::string first_failure;
  bool unimodular = false;
  SearchOutcome symmetric = SearchOutcome::NotFound;
  bool frobenius = false;
  bool cocommutative = false;
  Vector<K> left, right, modular;
  Json json;
};

template <class K>
HopfFacts<K> hopf_facts(const HopfAlgebra<K>& H) {
  HopfFacts<K> f;
  const AxiomReport rep = verify_axioms(H);
  f.axioms = rep.ok();
  if (const auto* bad = rep.first_failure()) f.first_failure = bad->name + ": " + bad->witness;
  f.left = integrals(H, Side::Left).generator();
  f.right = integrals(H, Side::Right).generator();
  f.unimodular = is_unimodular(H);
  f.modular = modular_element(H);
  f.symmetric = symmetric_form(H.algebra).outcome;
  f.frobenius = frobenius_form(H.algebra).exists();
  f.cocommutative = H.is_cocommutative();
  auto fmt = [&](const Vector<K>& v) { return format_element(H, v); };
  f.json = Json{{"dim", H.dim()},
                {"axioms", f.axioms},
                {"left_integral", fmt(f.left)},
                {"right_integral", fmt(f.right)},
                {"unimodular", f.unimodular},
                {"symmetric", to_string(f.symmetric)},
                {"frobenius", f.frobenius},
                {"cocommutative", f.cocommutative}};
  return f;
}

// Shared checks for a Hopf algebra: axioms, and symmetric == unimodular when
// cocommutative.
template <class K>
HopfFacts<K> check_hopf(Checker& c, const std::string& name, const HopfAlgebra<K>& H) {
  HopfFacts<K> f = hopf_facts(H);
  c.check(name + " axioms", f.axioms, "pass", f.axioms ? "pass" : f.first_failure, "immediate");
  if (f.cocommutative) {
    const bool sym = f.symmetric == SearchOutcome::Found;
    const bool certified = sym || f.symmetric == SearchOutcome::Exhausted;
    c.check(name + " symmetric == unimodular", certified && sym == f.unimodular, yes_no(f.unimodular),
            std::string(to_string(f.symmetric)), "computed");
  }
  c.r.details[name] = f.json;
  return f;
}

template <class K>
struct SchemeFacts {
  Vector<K> lambda, via_modular;
  bool trivial = false, agree = false, dual_unimodular = false;
};

// Knop character by both routes, and trivial <=> k[G]* unimodular.
template <class K>
SchemeFacts<K> check_scheme(Checker& c, const std::string& name, const FiniteGroupScheme<K>& G) {
  SchemeFacts<K> s;
  s.lambda = knop_character(G);
  s.via_modular = knop_character_via_modular(G);
  s.trivial = is_trivial_character(G, s.lambda);
  s.agree = equal<K>(s.lambda, s.via_modular);
  s.dual_unimodular = is_unimodular(G.dual());
  c.check(name + " knop routes agree", s.agree, format_element(G.gamma(), s.lambda),
          format_element(G.gamma(), s.via_modular), "computed");
  c.flag(name + " knop trivial == k[G]* unimodular", s.dual_unimodular, s.trivial, "computed");
  c.r.details[name + " knop"] = Json{{"adjoint_route", format_element(G.gamma(), s.lambda)},
                                     {"modular_route", format_element(G.gamma(), knop_character_modular_route(G))},
                                     {"trivial", s.trivial}};
  return s;
}

template <class K>
TraceReport check_trace(Checker& c, SymmetricAlgebra<K>& S, int D, std::optional<long> order,
                        std::optional<bool> expect_equivariant) {
  TraceReport t = trace_equivariance_check(S, D, order);
  c.flag("trace image in A (d <= " + std::to_string(D) + ")", true, t.image_invariant, "computed");
  c.flag("trace A-linear on samples", true, t.a_linear, "computed");
  if (expect_equivariant) {
    if (*expect_equivariant)
      c.flag("trace G-equivariant", true, t.equivariant.value_or(false), "computed");
    else
      c.flag("trace equivariance skipped (not unimodular)", true, !t.equivariant.has_value(), "immediate");
  }
  if (order) c.flag("trace Reynolds scaling |G| id", true, t.reynolds_scaling.value_or(false), "immediate");
  c.r.details["trace"] = to_json(t);
  return t;
}

// ---------------------------------------------------------------------------
// Constant groups acting through matrices

struct ConstantExpect {
  std::optional<bool> small;
  std::optional<long> pseudo_reflections;
  std::optional<long> a_invariant;
  std::optional<std::vector<long>> hilbert_prefix;
  std::optional<RationalFunction> molien;
  bool all_conditions = false;
  std::optional<std::pair<int, int>> nondegenerate;  // (window, checked degrees)
};

template <class K>
void run_constant(Checker& c, const MatrixGroup<K>& rep, int D, int jobs, const ConstantExpect& ex) {
  const FieldSpec f = rep.field();
  const FiniteGroup& G = rep.group();
  const long order = G.order();
  const std::uint32_t p = f.characteristic();
  const bool modular = p != 0 && order % p == 0;
  c.r.details["group"] = Json{{"order", order}, {"dim", rep.dim()}, {"field", f.str()}, {"modular", modular}};

  const auto kg = check_hopf(c, "k[G]", group_algebra<K>(G, f));
  c.flag("k[G] unimodular", true, kg.unimodular, "immediate");
  auto scheme = constant_scheme_of(rep, "constant");
  check_hopf(c, "k^G", scheme->gamma());
  const auto s = check_scheme(c, "k^G", *scheme);
  c.flag("constant group knop character trivial", true, s.trivial, "example");

  const auto pr = pseudo_reflections(rep);
  const bool small = is_small_constant(rep);
  if (ex.small) c.flag("small", *ex.small, small, "immediate");
  if (ex.pseudo_reflections) c.number("pseudo-reflections", *ex.pseudo_reflections, static_cast<long>(pr.size()), "computed");

  const Comodule<K> V = matrix_group_comodule(rep, scheme);
  c.flag("V comodule axioms", true, verify_comodule(V).ok(), "computed");
  ClassifyOptions opts;
  opts.max_degree = D;
  opts.jobs = jobs;
  const ClassificationReport cl = classify_small_action(V, opts, &rep);
  c.r.details["classification"] = to_json(cl);
  c.flag("classification consistent", true, cl.consistency, "computed");
  if (ex.hilbert_prefix) {
    std::vector<long> got(cl.hilbert.begin(), cl.hilbert.begin() + std::min(cl.hilbert.size(), ex.hilbert_prefix->size()));
    c.seq("Hilbert function", *ex.hilbert_prefix, got, "computed");
  }
  if (small) {
    bool agree = true;
    for (int k = 1; k <= 7; ++k) agree = agree && (cl.condition(k).verdict == Verdict::Holds) == cl.det_trivial;
    c.flag("conditions (1)-(7) match det_V triviality", true, agree, "example");
  }
  if (ex.all_conditions) {
    bool all = true;
    for (int k = 1; k <= 7; ++k) all = all && cl.condition(k).verdict == Verdict::Holds;
    c.flag("all seven conditions hold", true, all, "example");
  }
  if (ex.a_invariant) {
    c.check("a(A) omega route", cl.a_omega.determined() && *cl.a_omega.value == *ex.a_invariant,
            std::to_string(*ex.a_invariant), cl.a_omega.str(), "computed");
  }
  std::optional<RationalFunction> series;
  if constexpr (std::is_same_v<K, Rational>) {
    if (!modular) {
      series = molien_series(rep);
      const auto coeffs = series->series(D + 1);
      bool match = true;
      for (int d = 0; d <= D; ++d) match = match && coeffs[d] == Rational(cl.hilbert[d]);
      c.flag("Molien coefficients == invariant dimensions (d <= " + std::to_string(D) + ")", true, match, "computed");
      c.check("a(A) omega route == Molien route",
              cl.a_molien && cl.a_omega.determined() && *cl.a_omega.value == *cl.a_molien, cl.a_omega.str(),
              cl.a_molien ? std::to_string(*cl.a_molien) : "none", "computed");
      if (ex.molien) c.check("Molien series", *ex.molien == *series, ex.molien->str(), series->str(), "computed");
    }
  }
  const GjsReport g = gjs_inequality_check(cl.omega, cl.n, small, series);
  c.flag("a(A) <= -n within window", true, g.holds, "example");
  c.r.details["gjs"] = to_json(g);

  auto S = std::make_shared<SymmetricAlgebra<K>>(dual_comodule(V));
  const int Dt = std::min(D, 8);
  check_trace(c, *S, Dt, order, true);
  if (ex.nondegenerate) {
    auto [window, upto] = *ex.nondegenerate;
    const TraceReport t = trace_equivariance_check(*S, window);
    bool ok = true;
    for (const auto& d : t.nondegeneracy)
      if (d.degree <= upto) ok = ok && d.ok;
    c.flag("trace pairing nondegenerate in degrees <= " + std::to_string(upto) + " (D = " + std::to_string(window) + ")",
           true, ok, "computed");
  }
}


// ---------------------------------------------------------------------------
// Entries

using Runner = void (*)(Checker&, const CatalogParams&, int jobs);

template <class F>
void with_field(long p, F&& fn) {
  const FieldSpec f = field_param(p);
  visit_field(f, [&](auto zero) { fn(zero, f); });
}

void run_watanabe(Checker& c, const CatalogParams& p, int jobs) {
  ConstantExpect ex;
  ex.small = true;
  ex.pseudo_reflections = 0;
  ex.a_invariant = -2;
  ex.hilbert_prefix = std::vector<long>{1, 0, 3, 0, 5, 0, 7};
  ex.molien = RationalFunction(Poly({Rational(1), Rational(0), Rational(1)}), Poly::one_minus_t_power(2).pow(2));
  ex.all_conditions = true;
  ex.nondegenerate = std::pair{4, 2};
  run_constant(c, minus_identity_group(), static_cast<int>(param(p, "D")), jobs, ex);
}

void run_reflection(Checker& c, const CatalogParams& p, int jobs) {
  ConstantExpect ex;
  ex.small = false;
  ex.pseudo_reflections = 1;
  ex.a_invariant = -3;
  ex.molien = RationalFunction(Poly(1), Poly::one_minus_t_power(1) * Poly::one_minus_t_power(2));
  run_constant(c, reflection_group(), static_cast<int>(param(p, "D")), jobs, ex);
  c.flag("outside hypotheses", true, c.r.details["gjs"]["outside_hypotheses"].get<bool>(), "immediate");
  c.flag("a(A) < -n strictly", true, c.r.details["gjs"]["strict"].get<bool>(), "computed");
}

template <class K>
MatrixGroup<K> cyclic_rep(int n, const FieldSpec& f) {
  // 2-dimensional representations inside SL_2(Z) where they exist
  switch (n) {
    case 2:
      return MatrixGroup<K>::generated_by({integer_matrix<K>({{-1, 0}, {0, -1}}, f)}, f);
    case 3:
      return MatrixGroup<K>::generated_by({integer_matrix<K>({{0, -1}, {1, -1}}, f)}, f);
    case 4:
      return MatrixGroup<K>::generated_by({integer_matrix<K>({{0, -1}, {1, 0}}, f)}, f);
    case 6:
      return MatrixGroup<K>::generated_by({integer_matrix<K>({{1, -1}, {1, 0}}, f)}, f);
    default: {
      std::vector<int> shift(n);
      for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
      return MatrixGroup<K>::generated_by({permutation_matrix<K>(shift, f)}, f);
    }
  }
}

void run_cyclic(Checker& c, const CatalogParams& p, int jobs) {
  const int n = static_cast<int>(param(p, "n"));
  if (n < 1 || n > 8) throw std::invalid_argument("cyclic: n must be in 1..8");
  with_field(param(p, "p"), [&](auto zero, const FieldSpec& f) {
    using K = decltype(zero);
    const auto rep = cyclic_rep<K>(n, f);
    ConstantExpect ex;
    if (f.is_rational()) {
      c.number("group order", n, rep.order(), "immediate");
      if (n == 3 || n == 4 || n == 6) {
        ex.small = true;
        ex.all_conditions = true;
        ex.a_invariant = -2;
      }
    }
    run_constant(c, rep, static_cast<int>(param(p, "D")), jobs, ex);
  });
}

void run_dihedral(Checker& c, const CatalogParams& p, int jobs) {
  const int n = static_cast<int>(param(p, "n"));
  if (n < 3 || n > 6) throw std::invalid_argument("dihedral: n must be in 3..6");
  with_field(param(p, "p"), [&](auto zero, const FieldSpec& f) {
    using K = decltype(zero);
    std::vector<int> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      ref[i] = (n - i) % n;
    }
    const auto rep = MatrixGroup<K>::generated_by({permutation_matrix<K>(rot, f), permutation_matrix<K>(ref, f)}, f);
    c.number("group order", 2 * n, rep.order(), "immediate");
    ConstantExpect ex;
    ex.small = false;  // the reflection fixing vertex 0 swaps two pairs at most; n = 3, 4 give transpositions
    if (n > 4) ex.small.reset();
    run_constant(c, rep, static_cast<int>(param(p, "D")), jobs, ex);
  });
}

void run_symmetric(Checker& c, const CatalogParams& p, int jobs) {
  const int n = static_cast<int>(param(p, "n"));
  if (n < 2 || n > 4) throw std::invalid_argument("symmetric: n must be in 2..4");
  with_field(param(p, "p"), [&](auto zero, const FieldSpec& f) {
    using K = decltype(zero);
    std::vector<int> swap(n), cycle(n);
    for (int i = 0; i < n; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    const auto rep = MatrixGroup<K>::generated_by({permutation_matrix<K>(swap, f), permutation_matrix<K>(cycle, f)}, f);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    c.number("group order", fact, rep.order(), "immediate");
    ConstantExpect ex;
    ex.small = false;
    ex.pseudo_reflections = n * (n - 1) / 2;
    run_constant(c, rep, static_cast<int>(param(p, "D")), jobs, ex);
  });
}

void run_s3_permutation(Checker& c, const CatalogParams& p, int jobs) {
  CatalogParams q = p;
  q["n"] = 3;
  q["p"] = 0;
  run_symmetric(c, q, jobs);
}

void run_klein(Checker& c, const CatalogParams& p, int jobs) {
  with_field(param(p, "p"), [&](auto zero, const FieldSpec& f) {
    using K = decltype(zero);
    const auto rep = MatrixGroup<K>::generated_by(
        {integer_matrix<K>({{-1, 0}, {0, 1}}, f), integer_matrix<K>({{1, 0}, {0, -1}}, f)}, f);
    ConstantExpect ex;
    if (f.characteristic() != 2) {
      c.number("group order", 4, rep.order(), "immediate");
      ex.small = false;
      ex.pseudo_reflections = 2;
      ex.a_invariant = -4;
    }
    run_constant(c, rep, static_cast<int>(param(p, "D")), jobs, ex);
  });
}

void run_ul(Checker& c, const CatalogParams& p, int) {
  const long pp = param(p, "p");
  if (!is_prime(pp)) throw std::invalid_argument("uL: p must be prime");
  const auto P = static_cast<std::uint32_t>(pp);
  const RestrictedLieAlgebra L = affine_line_lie_algebra(P);
  const LieCheck lc = check_restricted_lie(L);
  c.check("restricted Lie axioms", lc.ok, "pass", lc.ok ? "pass" : lc.failure, "computed");
  const HopfAlgebra<Fp> U = restricted_enveloping(L);
  c.number("dim u(L)", pp * pp, U.dim(), "immediate");
  const auto f = check_hopf(c, "u(L)", U);
  c.flag("left integral != right integral", true, !equal<Fp>(f.left, f.right), "example");
  c.flag("unimodular", false, f.unimodular, "example");
  c.text("symmetric form", to_string(SearchOutcome::Exhausted), to_string(f.symmetric), "example");
  c.flag("frobenius", true, f.frobenius, "immediate");
  // the modular element takes e -> 0 and f -> 1
  const int ie = 1, iff = static_cast<int>(P);
  c.text("modular element on (e, f)", "0,1", f.modular(ie).str() + "," + f.modular(iff).str(), "computed");
  const auto G = restricted_lie_scheme(L, "Spec u(L)*");
  const auto s = check_scheme(c, "Spec u(L)*", *G);
  c.flag("knop character nontrivial", true, !s.trivial, "example");
}

void run_mu_semidirect_alpha(Checker& c, const CatalogParams& p, int jobs) {
  const long l = param(p, "l"), pp = param(p, "p");
  const int D = static_cast<int>(param(p, "D"));
  if (l < 2 || !is_prime(pp) || l * pp > 200) throw std::invalid_argument("mu-semidirect-alpha: need l >= 2, p prime, l*p <= 200");
  if (l % 2 == 0 || !is_prime(l)) c.r.warnings.push_back("l is not an odd prime");
  if (l == pp) c.r.warnings.push_back("l = p: Hilbert functions cannot separate omega_A from a shift of A");
  if ((pp - 1) % l == 0) c.r.warnings.push_back("l divides p-1: the Knop character is trivial for these parameters");
  const auto P = static_cast<std::uint32_t>(pp);
  const auto G = mu_semidirect_alpha_scheme(static_cast<int>(l), P);
  c.number("dim k[G]", l * pp, G->dim(), "immediate");
  check_hopf(c, "k[G]", G->gamma());
  const auto s = check_scheme(c, "G", *G);
  const int e = mu_semidirect_alpha_lambda_exponent(static_cast<int>(l), P);
  const std::string expected_lambda = e == 0 ? "1" : e == 1 ? "t" : "t^" + std::to_string(e);
  c.text("knop character", expected_lambda, format_element(G->gamma(), s.lambda), "computed");
  c.flag("knop character nontrivial iff l does not divide p-1", (pp - 1) % l != 0, !s.trivial, "example");

  const Comodule<Fp> W = mu_semidirect_alpha_vector(G);
  const Comodule<Fp> V = mu_semidirect_alpha_module(G);
  c.flag("W comodule axioms", true, verify_comodule(W).ok(), "computed");
  c.flag("V comodule axioms", true, verify_comodule(V).ok(), "computed");
  c.flag("det_V trivial", true, is_trivial_character(*G, det_character(V)), "example");

  ClassifyOptions opts;
  opts.small_asserted = true;
  opts.max_degree = D;
  opts.jobs = jobs;
  const ClassificationReport cl = classify_small_action(V, opts);
  c.r.details["classification"] = to_json(cl);
  c.flag("classification consistent", true, cl.consistency, "computed");
  if (!s.trivial) {
    c.flag("det_V != lambda (twist nontrivial)", true, !cl.twist_trivial, "example");
    c.flag("omega_A differs from A(-n) within window", true, !cl.hilbert_consistent, "example");
    if (l % 2 == 1 && is_prime(l) && l != pp)
      c.flag("not quasi-Gorenstein (condition (5) fails)", true, cl.condition(5).verdict == Verdict::Fails, "example");
    else
      c.r.warnings.push_back("condition (5) not asserted for these parameters: " + to_string(cl.condition(5).verdict));
  }
  const GjsReport g = gjs_inequality_check(cl.omega, cl.n, true);
  c.flag("a(A) <= -n within window", true, g.holds, "example");
  c.r.details["gjs"] = to_json(g);
  auto S = std::make_shared<SymmetricAlgebra<Fp>>(dual_comodule(V));
  check_trace(c, *S, std::min(D, 8), std::nullopt, s.dual_unimodular);
}

void run_determinantal(Checker& c, const CatalogParams& p, int) {
  const int m = static_cast<int>(param(p, "m")), n = static_cast<int>(param(p, "n"));
  if (m < 1 || n < 1 || m + n > 12) throw std::invalid_argument("determinantal: need m, n >= 1 and m + n <= 12");
  if (m < 2 || n < 2) c.r.warnings.push_back("smallness is asserted only for m, n >= 2");
  const DiagonalizableAction a = determinantal_action(m, n);
  const Poly den = determinantal_denominator(m, n);
  const RationalFunction h = diagonal_hilbert_series(a, den);
  const long big = std::max(m, n);
  c.number("a(A) from the Hilbert series", -2 * big, a_invariant_via_molien(h), "example");
  c.flag("numerator palindromic (Gorenstein)", m == n, h.num().is_palindromic(), "example");
  c.flag("a(A) < -(m+n) strictly", m != n, a_invariant_via_molien(h) < -(m + n), "example");

  // dim A_{2k} = C(k+m-1, k) C(k+n-1, k): products of one monomial of each side
  auto binom = [](long top, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
  };
  const auto counts = weight_hilbert_function(a, 12, 0);
  std::vector<long> expected;
  for (int d = 0; d <= 12; ++d) expected.push_back(d % 2 ? 0 : binom(d / 2 + m - 1, d / 2) * binom(d / 2 + n - 1, d / 2));
  c.seq("Hilbert function", expected, counts, "computed");

  ClassifyOptions opts;
  opts.small_asserted = true;
  opts.max_degree = static_cast<int>(param(p, "D"));
  const ClassificationReport cl = classify_diagonal_action(a, opts, den);
  c.r.details["hilbert_series"] = h.str();
  c.r.details["classification"] = to_json(cl);
  c.flag("classification consistent", true, cl.consistency, "computed");
  c.flag("det_V trivial iff m = n", m == n, cl.det_trivial, "immediate");
  c.check("a(A) omega route == series route", cl.a_omega.determined() && *cl.a_omega.value == -2 * big,
          std::to_string(-2 * big), cl.a_omega.str(), "computed");
  const GjsReport g = gjs_inequality_check(cl.omega, cl.n, m >= 2 && n >= 2, h);
  c.flag("a(A) <= -n within window", true, g.holds, "example");
  c.r.details["gjs"] = to_json(g);
}

void run_o2(Checker& c, const CatalogParams&, int) {
  const Matrix<Rational> act = o2_lie_action();
  const Rational det = determinant<Rational>(act);
  c.text("det of r on so(2)", "-1", det.str(), "example");
  c.flag("lambda nontrivial on O(2)", true, det != Rational(1), "example");
}

std::vector<long> weights_param(const CatalogParams& p) {
  std::vector<long> w;
  for (int i = 1;; ++i) {
    auto it = p.find("w" + std::to_string(i));
    if (it == p.end()) break;
    w.push_back(it->second);
  }
  for (const auto& [k, v] : p)
    if (k.size() > 1 && k[0] == 'w' && std::isdigit(static_cast<unsigned char>(k[1])) &&
        std::stol(k.substr(1)) > static_cast<long>(w.size()))
      throw std::invalid_argument("weights must be numbered w1, w2, ... without gaps");
  if (w.empty()) throw std::invalid_argument("mu-m-weights needs weights w1, w2, ...");
  return w;
}

void run_mu_weights(Checker& c, const CatalogParams& p, int jobs) {
  const long m = param(p, "m");
  const int D = static_cast<int>(param(p, "D"));
  if (m < 1 || m > 12) throw std::invalid_argument("mu-m-weights: m must be in 1..12");
  DiagonalizableAction a{weights_param(p), m};
  const FieldSpec Q = FieldSpec::rationals();
  const auto G = mu_scheme<Rational>(static_cast<int>(m), Q);
  std::vector<int> idx;
  for (long w : a.weights) idx.push_back(static_cast<int>(((w % m) + m) % m));
  const Comodule<Rational> V = diagonal_comodule(G, idx);
  c.flag("V comodule axioms", true, verify_comodule(V).ok(), "computed");
  const auto s = check_scheme(c, "mu_m", *G);
  c.flag("knop character trivial", true, s.trivial, "example");

  auto S = std::make_shared<SymmetricAlgebra<Rational>>(dual_comodule(V));
  S->prepare(D);
  bool same = true;
  std::string where;
  for (int d = 0; d <= D && same; ++d) {
    const auto kernel = invariants_kernel_route(S->power(d));
    const auto mons = weight_invariant_monomials(a, d);
    RowEchelon<Rational> span(static_cast<std::size_t>(S->dim(d)), Q);
    for (const auto& v : kernel) span.add(v);
    same = kernel.size() == mons.size();
    for (int q : mons) same = same && span.contains(unit_vector<Rational>(static_cast<Eigen::Index>(S->dim(d)), q, Q));
    if (!same) where = "degree " + std::to_string(d);
  }
  c.check("weight route == kernel route (span, d <= " + std::to_string(D) + ")", same, "equal", same ? "equal" : where,
          "computed");

  ClassifyOptions opts;
  opts.max_degree = D;
  opts.jobs = jobs;
  const ClassificationReport cl = classify_diagonal_action(a, opts);
  c.r.details["classification"] = to_json(cl);
  c.flag("classification consistent", true, cl.consistency, "computed");
  GradedInvariantRing<Rational> A(S);
  c.seq("generator route == weight route (Hilbert)", cl.hilbert, A.hilbert(D, jobs), "computed");
  if (m == 3 && a.weights == std::vector<long>{1, 2}) {
    c.seq("Hilbert function", {1, 0, 1, 2, 1, 2, 3},
          std::vector<long>(cl.hilbert.begin(), cl.hilbert.begin() + std::min<std::size_t>(7, cl.hilbert.size())),
          "computed");
    c.check("a(A)", cl.a_omega.determined() && *cl.a_omega.value == -2, "-2", cl.a_omega.str(), "computed");
  }
  if (cl.smallness == "verified") {
    bool agree = true;
    for (int k = 1; k <= 7; ++k) agree = agree && (cl.condition(k).verdict == Verdict::Holds) == cl.det_trivial;
    c.flag("conditions (1)-(7) match det_V triviality", true, agree, "example");
  }
  const GjsReport g = gjs_inequality_check(cl.omega, cl.n, cl.smallness != "fails",
                                           diagonal_hilbert_series(a, Poly::one_minus_t_power(static_cast<int>(m)).pow(a.dim())));
  c.flag("a(A) <= -n within window", true, g.holds, "example");
  c.r.details["gjs"] = to_json(g);
  check_trace(c, *S, std::min(D, 8), std::nullopt, true);
}

void run_alpha(Checker& c, const CatalogParams& p, int) {
  const long pp = param(p, "p");
  if (!is_prime(pp) || pp > 13) throw std::invalid_argument("alpha-p: p must be a prime <= 13");
  const auto P = static_cast<std::uint32_t>(pp);
  const auto G = alpha_scheme(P);
  check_hopf(c, "k[G]", G->gamma());
  check_hopf(c, "k[G]*", G->dual());
  const auto s = check_scheme(c, "alpha_p", *G);
  c.flag("knop character trivial", true, s.trivial, "example");

  const Comodule<Fp> V = alpha_unipotent_module(G);
  c.flag("V comodule axioms", true, verify_comodule(V).ok(), "computed");
  auto S = std::make_shared<SymmetricAlgebra<Fp>>(dual_comodule(V));
  const int top = static_cast<int>(pp) - 1;
  S->prepare(top);
  c.number("dim of invariants in S_1", 1, static_cast<long>(invariants(S->power(1)).size()), "computed");
  // Tr(x^(p-1)) = y^(p-1) and Tr(y^(p-1)) = 0, with y the fixed variable
  const FieldSpec f = G->field();
  const auto& mons = S->monomials(top);
  int ix = -1, iy = -1;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (mons[i][0] == top) ix = static_cast<int>(i);
    if (mons[i][1] == top) iy = static_cast<int>(i);
  }
  const auto N = static_cast<Eigen::Index>(mons.size());
  const Vector<Fp> tx = trace_map(*S, top, unit_vector<Fp>(N, ix, f));
  const Vector<Fp> ty = trace_map(*S, top, unit_vector<Fp>(N, iy, f));
  const auto names = S->table().variable_names();
  auto show = [&](const Vector<Fp>& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) out += (out.empty() ? "" : " + ") + v(i).str() + "*" + monomial_string(mons[i], names);
    return out.empty() ? std::string("0") : out;
  };
  const std::string ypow = "1*" + monomial_string(mons[iy], names);
  c.text("Tr(x^(p-1))", ypow, show(tx), "computed");
  c.text("Tr(y^(p-1))", "0", show(ty), "computed");
  check_trace(c, *S, 8, std::nullopt, true);
}

void run_mu_n(Checker& c, const CatalogParams& p, int) {
  const int n = static_cast<int>(param(p, "n"));
  if (n < 1 || n > 30) throw std::invalid_argument("mu-n: n must be in 1..30");
  with_field(param(p, "p"), [&](auto zero, const FieldSpec& f) {
    using K = decltype(zero);
    const auto G = mu_scheme<K>(n, f);
    check_hopf(c, "k[G]", G->gamma());
    check_hopf(c, "k[G]*", G->dual());
    const auto s = check_scheme(c, "mu_n", *G);
    c.flag("knop character trivial", true, s.trivial, "example");
  });
}

void run_mu2_alpha2(Checker& c, const CatalogParams&, int) {
  const FieldSpec f = FieldSpec::prime(2);
  const auto G = direct_product(*mu_scheme<Fp>(2, f), *alpha_scheme(2));
  check_hopf(c, "k[G]", G->gamma());
  check_hopf(c, "k[G]*", G->dual());
  const auto s = check_scheme(c, "mu_2 x alpha_2", *G);
  c.flag("knop character trivial", true, s.trivial, "example");
}

void run_mu_semidirect_cyclic(Checker& c, const CatalogParams& p, int) {
  const int l = static_cast<int>(param(p, "l")), n = static_cast<int>(param(p, "c")), sh = static_cast<int>(param(p, "s"));
  if (l < 1 || n < 1 || l * n > 120) throw std::invalid_argument("mu-semidirect-cyclic: need l, c >= 1 and l*c <= 120");
  long pw = 1;
  for (int i = 0; i < n; ++i) pw = pw * sh % l;
  if (pw != 1 % l) throw std::invalid_argument("mu-semidirect-cyclic: s^c must be 1 mod l");
  with_field(param(p, "p"), [&](auto zero, const FieldSpec& f) {
    using K = decltype(zero);
    const auto G = mu_semidirect_cyclic_scheme<K>(l, n, sh, f);
    check_hopf(c, "k[G]", G->gamma());
    check_hopf(c, "k[G]*", G->dual());
    const auto s = check_scheme(c, "G", *G);
    c.r.details["knop_character"] = format_element(G->gamma(), s.lambda);
  });
}

struct Registered {
  CatalogEntry entry;
  Runner run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = {
      {{"watanabe-minus-id", "<-I> in SL_2(Q): all seven conditions, a(A) = -2", {{"D", 10}}}, run_watanabe},
      {{"reflection", "<diag(1,-1)> in GL_2(Q): not small, a(A) = -3", {{"D", 10}}}, run_reflection},
      {{"uL", "u(L) for [f,e] = e, e^[p] = 0, f^[p] = f over F_p", {{"p", 3}}}, run_ul},
      {{"mu-semidirect-alpha", "mu_l x| alpha_p on W (+) W* over F_p", {{"l", 3}, {"p", 5}, {"D", 12}}},
       run_mu_semidirect_alpha},
      {{"determinantal", "t = 2 determinantal ring as G_m invariants (degrees doubled)", {{"m", 2}, {"n", 2}, {"D", 12}}},
       run_determinantal},
      {{"o2-lie-check", "r = diag(1,-1) acts by -1 on so(2)", {}}, run_o2},
      {{"mu-m-weights", "mu_m acting diagonally with weights w1, w2, ...", {{"m", 3}, {"w1", 1}, {"w2", 2}, {"D", 10}}},
       run_mu_weights},
      {{"cyclic", "C_n in SL_2(Z) for n = 2, 3, 4, 6, else regular permutations; p = 0 means Q",
        {{"n", 4}, {"p", 0}, {"D", 10}}},
       run_cyclic},
      {{"dihedral", "D_n permuting the vertices of an n-gon", {{"n", 4}, {"p", 0}, {"D", 10}}}, run_dihedral},
      {{"symmetric", "S_n permuting coordinates", {{"n", 3}, {"p", 0}, {"D", 10}}}, run_symmetric},
      {{"s3-permutation", "S_3 permuting coordinates of Q^3: three pseudo-reflections", {{"D", 10}}}, run_s3_permutation},
      {{"klein", "C_2 x C_2 = <diag(-1,1), diag(1,-1)>", {{"p", 0}, {"D", 10}}}, run_klein},
      {{"alpha-p", "alpha_p, and its unipotent action on k^2", {{"p", 5}}}, run_alpha},
      {{"mu-n", "mu_n over Q or F_p", {{"n", 3}, {"p", 3}}}, run_mu_n},
      {{"mu2-x-alpha2", "mu_2 x alpha_2 over F_2", {}}, run_mu2_alpha2},
      {{"mu-semidirect-cyclic", "mu_l x| Z/c with t acting by multiplication by s", {{"l", 3}, {"c", 2}, {"s", 2}, {"p", 3}}},
       run_mu_semidirect_cyclic},
  };
  return r;
}

const Registered& lookup(const std::string& name) {
  for (const auto& r : registry())
    if (r.entry.name == name) return r;
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

CatalogParams merged(const CatalogEntry& e, const CatalogParams& params) {
  CatalogParams out = e.defaults;
  for (const auto& [k, v] : params) {
    const bool weight = e.name == "mu-m-weights" && k.size() > 1 && k[0] == 'w';
    if (!out.count(k) && !weight) throw std::invalid_argument("entry " + e.name + " has no parameter '" + k + "'");
    out[k] = v;
  }
  if (e.name == "mu-m-weights" && std::any_of(params.begin(), params.end(), [](const auto& kv) { return kv.first[0] == 'w'; })) {
    // explicit weights replace the default list
    for (auto it = out.begin(); it != out.end();)
      it = it->first[0] == 'w' && !params.count(it->first) ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> out = [] {
    std::vector<CatalogEntry> v;
    for (const auto& r : registry()) v.push_back(r.entry);
    return v;
  }();
  return out;
}

CatalogResult run_catalog(const std::string& name, const CatalogParams& params, int jobs) {
  const Registered& reg = lookup(name);
  CatalogResult r;
  r.name = name;
  r.params = merged(reg.entry, params);
  Checker c{r};
  reg.run(c, r.params, resolve_jobs(jobs));
  return r;
}

Json catalog_export(const std::string& name, const CatalogParams& params) {
  const Registered& reg = lookup(name);
  const CatalogParams p = merged(reg.entry, params);
  Json out;
  auto constant = [&](const auto& rep) {
    Json mats = Json::array();
    for (const auto& g : rep.elements()) {
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < g.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(scalar_to_json(g(i, j)));
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    out["module"] = Json{{"field", field_to_json(rep.field())}, {"constant_group", Json{{"matrices", mats}}}};
  };
  if (name == "watanabe-minus-id") {
    constant(minus_identity_group());
  } else if (name == "reflection") {
    constant(reflection_group());
  } else if (name == "cyclic") {
    with_field(p.at("p"), [&](auto zero, const FieldSpec& f) {
      constant(cyclic_rep<decltype(zero)>(static_cast<int>(p.at("n")), f));
    });
  } else if (name == "uL") {
    const RestrictedLieAlgebra L = affine_line_lie_algebra(static_cast<std::uint32_t>(p.at("p")));
    out["hopf"] = hopf_to_json(restricted_enveloping(L));
    out["scheme"] = scheme_to_json(*restricted_lie_scheme(L, "Spec u(L)*"));
  } else if (name == "mu-semidirect-alpha") {
    const auto G = mu_semidirect_alpha_scheme(static_cast<int>(p.at("l")), static_cast<std::uint32_t>(p.at("p")));
    out["scheme"] = scheme_to_json(*G);
    out["module"] = comodule_to_json(mu_semidirect_alpha_module(G), false);
  } else if (name == "determinantal") {
    const auto a = determinantal_action(static_cast<int>(p.at("m")), static_cast<int>(p.at("n")));
    out["module"] = Json{{"diagonal", Json{{"weights", a.weights}, {"modulus", 0}}}};
  } else if (name == "mu-m-weights") {
    out["module"] = Json{{"diagonal", Json{{"weights", weights_param(p)}, {"modulus", p.at("m")}}}};
  } else if (name == "alpha-p") {
    const auto G = alpha_scheme(static_cast<std::uint32_t>(p.at("p")));
    out["scheme"] = scheme_to_json(*G);
    out["module"] = comodule_to_json(alpha_unipotent_module(G), false);
  } else if (name == "mu2-x-alpha2") {
    out["scheme"] = scheme_to_json(*direct_product(*mu_scheme<Fp>(2, FieldSpec::prime(2)), *alpha_scheme(2)));
  } else {
    throw std::invalid_argument("entry " + name + " has no export");
  }
  return out;
}

Json to_json(const CatalogResult& r) {
  Json j;
  j["entry"] = r.name;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"check", c.what}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}, {"source", c.source}});
  j["checks"] = std::move(checks);
  j["warnings"] = r.warnings;
  j["details"] = r.details;
  return j;
}

}  // namespace knopf
