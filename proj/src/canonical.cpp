#include "knopf/canonical.hpp"

#include <numeric>

namespace knopf {

AInvariant a_invariant_via_omega(const std::vector<long>& omega, int n) {
  AInvariant a;
  const long D = static_cast<long>(omega.size()) - 1;
  for (long j = 0; j <= D; ++j)
    if (omega[j] != 0) {
      a.value = -(n + j);
      a.upper_bound = *a.value;
      return a;
    }
  a.upper_bound = -(n + D + 1);
  return a;
}

long a_invariant_via_molien(const RationalFunction& h) { return h.degree(); }

Poly reconstruct_rational(const std::vector<Rational>& coeffs, const Poly& den) {
  const int L = static_cast<int>(coeffs.size());
  std::vector<Rational> num(L);
  for (int k = 0; k < L; ++k)
    for (int i = 0; i <= std::min(k, den.degree()); ++i) num[k] += den[i] * coeffs[k - i];
  Poly N(num);
  if (L - 1 - N.degree() < den.degree()) throw std::invalid_argument("window too small or wrong denominator");
  return N;
}

Poly reconstruct_rational(const std::vector<long>& coeffs, const Poly& den) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return reconstruct_rational(c, den);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    default:
      return "not_evaluated";
  }
}

namespace {

Condition holds(std::string e) { return {Verdict::Holds, std::move(e)}; }
Condition fails(std::string e) { return {Verdict::Fails, std::move(e)}; }
Condition unknown(std::string e) { return {Verdict::NotEvaluated, std::move(e)}; }

std::string deg(long d) { return std::to_string(d); }

}  // namespace

ClassificationReport assemble_classification(const ClassificationInputs& in) {
  ClassificationReport r;
  r.n = in.n;
  r.window = in.window;
  r.smallness = in.smallness;
  r.outside_hypotheses = in.smallness == "fails";
  r.det_trivial = in.det_trivial;
  r.lambda_trivial = in.lambda_trivial;
  r.twist_trivial = in.twist_trivial;
  r.det_v = in.det_v;
  r.lambda = in.lambda;
  r.twist = in.twist;
  r.watanabe_path = !in.lambda_trivial;
  r.hilbert = in.hilbert;
  r.omega = in.omega;
  r.a_omega = a_invariant_via_omega(in.omega, in.n);
  const int n = in.n;
  const int D = in.window;

  r.hilbert_consistent = true;
  for (int j = 0; j <= D; ++j)
    if (in.omega[j] != in.hilbert[j]) {
      r.hilbert_consistent = false;
      r.witnesses.push_back("dim (omega_A)_" + deg(n + j) + " = " + deg(in.omega[j]) + " but dim A(-n)_" + deg(n + j) +
                            " = " + deg(in.hilbert[j]));
      break;
    }

  if (in.series) {
    r.hilbert_series = in.series->str();
    r.a_molien = a_invariant_via_molien(*in.series);
    const auto coeffs = in.series->series(D + 1);
    for (int d = 0; d <= D; ++d)
      if (coeffs[d] != Rational(in.hilbert[d])) {
        r.consistency = false;
        r.witnesses.push_back("Hilbert series coefficient " + coeffs[d].str() + " differs from dim A_" + deg(d) + " = " +
                              deg(in.hilbert[d]));
        break;
      }
    if (r.a_omega.determined() ? *r.a_omega.value != *r.a_molien : *r.a_molien > r.a_omega.upper_bound) {
      r.consistency = false;
      r.witnesses.push_back("a-invariant routes disagree: omega " + r.a_omega.str() + ", series " + deg(*r.a_molien));
    }
  }

  auto& c = r.conditions;
  if (in.det_trivial) {
    c[0] = holds("det_V = 1");
    c[1] = holds("omega_S = S (x) det_V = S(-n)");
    c[2] = holds("omega_S = S (x) det_V with det_V trivial");
  } else {
    c[0] = fails("det_V = " + in.det_v);
    c[1] = fails("omega_S = S (x) det_V with det_V = " + in.det_v + " nontrivial");
    c[2] = fails("S/S_+ (x)_S omega_S = det_V is a nontrivial character");
  }

  if (in.twist_trivial) {
    c[3] = holds("omega_A = (S (x) det(V*) lambda^-1)^G = A(-n); Hilbert-consistent within window");
    c[4] = holds("omega_A = A(-n)");
  } else {
    if (!r.hilbert_consistent)
      c[3] = fails(r.witnesses.front());
    else
      c[3] = unknown("twist " + in.twist + " is nontrivial but omega_A is Hilbert-consistent with A(-n) within window");
    if (!r.a_omega.determined()) {
      c[4] = unknown("omega_A vanishes on the window");
    } else {
      // omega_A = A(a) forces dim (omega_A)_d = dim A_{d+a}
      const long a = *r.a_omega.value;
      std::optional<std::string> mismatch;
      for (int j = 0; j <= D && !mismatch; ++j) {
        const long d = n + j;
        const long src = d + a;
        const long want = src < 0 ? 0 : in.hilbert[src];
        if (in.omega[j] != want)
          mismatch = "dim (omega_A)_" + deg(d) + " = " + deg(in.omega[j]) + " but dim A(" + deg(a) + ")_" + deg(d) +
                     " = " + deg(want);
      }
      if (mismatch) {
        c[4] = fails("no shift of A matches omega_A: " + *mismatch);
        r.witnesses.push_back(*mismatch);
      } else {
        c[4] = unknown("Hilbert-consistent with A(" + deg(a) + ") within window");
      }
    }
  }

  if (r.a_omega.determined())
    c[6] = *r.a_omega.value == -n ? holds("a(A) = " + r.a_omega.str() + " = -n (omega route)")
                                  : fails("a(A) = " + r.a_omega.str() + " != -n (omega route)");
  else
    c[6] = fails("a(A) " + r.a_omega.str() + " < -n (omega route)");

  if (c[4].verdict == Verdict::Holds && c[6].verdict == Verdict::Holds)
    c[5] = holds("conditions (5) and (7) hold");
  else if (c[4].verdict == Verdict::Fails || c[6].verdict == Verdict::Fails)
    c[5] = fails(c[4].verdict == Verdict::Fails ? "condition (5) fails" : "condition (7) fails");
  else
    c[5] = unknown("condition (5) not evaluated");

  auto check = [&](int k, bool expected, const std::string& master) {
    const Verdict v = c[k - 1].verdict;
    if (v == Verdict::NotEvaluated) return;
    if ((v == Verdict::Holds) != expected) {
      r.consistency = false;
      r.witnesses.push_back("condition (" + std::to_string(k) + ") " + to_string(v) + " but " + master);
    }
  };
  const std::string det_master = in.det_trivial ? "det_V is trivial" : "det_V is nontrivial";
  for (int k = 1; k <= 3; ++k) check(k, in.det_trivial, det_master);
  if (!r.watanabe_path) {
    for (int k = 4; k <= 7; ++k) check(k, in.det_trivial, det_master);
  } else {
    const std::string tw = in.twist_trivial ? "det(V*) = lambda" : "det(V*) != lambda";
    for (int k = 4; k <= 6; ++k) check(k, in.twist_trivial, tw);
    r.notes.push_back("lambda = " + in.lambda +
                      " is nontrivial: the equivalences are not asserted; omega_A is computed with the twist "
                      "det(V*) lambda^-1 and A is quasi-Gorenstein iff that twist is trivial");
  }
  if (r.outside_hypotheses) r.notes.push_back("the action is not small: outside the hypotheses of the equivalence");
  r.notes.push_back("Hilbert comparisons are within window D = " + deg(D));
  return r;
}

bool is_small_diagonal(const DiagonalizableAction& a) {
  if (a.modulus <= 0) throw std::invalid_argument("smallness by weights needs a finite modulus");
  const long m = a.modulus;
  long g = m;
  for (long w : a.weights) g = std::gcd(g, ((w % m) + m) % m);
  if (g != 1) return false;
  for (long k = 1; k < m; ++k) {
    int moved = 0;
    for (long w : a.weights)
      if (((k * w) % m + m) % m != 0) ++moved;
    if (moved <= 1) return false;
  }
  return true;
}

RationalFunction diagonal_hilbert_series(const DiagonalizableAction& a, const Poly& den, long chi_weight) {
  const int q = std::max(den.degree(), 1);
  for (int L = 2 * q + 2; L <= 16 * q + 64; L *= 2) {
    const auto h = weight_hilbert_function(a, L - 1, chi_weight);
    try {
      return RationalFunction(reconstruct_rational(h, den), den);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("window too small or wrong denominator");
}

ClassificationReport classify_diagonal_action(const DiagonalizableAction& a, const ClassifyOptions& opts,
                                              std::optional<Poly> series_denominator) {
  ClassificationInputs in;
  in.n = a.dim();
  in.window = default_window(in.n, opts.max_degree);
  if (a.modulus > 0)
    in.smallness = is_small_diagonal(a) ? "verified" : "fails";
  else if (opts.small_asserted)
    in.smallness = "asserted";
  else
    throw HypothesisError("smallness of a torus action must be asserted");

  const long det = a.det_weight();
  in.det_trivial = a.is_trivial_weight(det);
  in.lambda_trivial = true;
  in.twist_trivial = a.is_trivial_weight(-det);
  in.det_v = "weight " + std::to_string(det);
  in.lambda = "1";
  in.twist = "weight " + std::to_string(-det);
  in.hilbert = weight_hilbert_function(a, in.window, 0);
  in.omega = weight_hilbert_function(a, in.window, -det);
  if (!series_denominator && a.modulus > 0)
    series_denominator = Poly::one_minus_t_power(static_cast<int>(a.modulus)).pow(in.n);
  if (series_denominator) in.series = diagonal_hilbert_series(a, *series_denominator);
  return assemble_classification(in);
}

GjsReport gjs_inequality_check(const std::vector<long>& omega, int n, bool small,
                               std::optional<RationalFunction> series) {
  GjsReport g;
  g.n = n;
  g.window = static_cast<int>(omega.size()) - 1;
  g.outside_hypotheses = !small;
  const AInvariant a = a_invariant_via_omega(omega, n);
  if (a.determined()) g.first_degree = -*a.value;
  g.holds = a.upper_bound <= -n;
  g.strict = a.upper_bound < -n;
  if (series) {
    g.a_series = series->degree();
    g.holds = g.holds && *g.a_series <= -n;
    if (a.determined() && *g.a_series != *a.value) {
      g.holds = false;
      g.note = "routes disagree: omega " + a.str() + ", series " + std::to_string(*g.a_series);
    }
  }
  if (!small) g.note += std::string(g.note.empty() ? "" : "; ") + "outside hypotheses (action not small)";
  return g;
}

}  // namespace knopf
