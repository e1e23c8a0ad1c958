#pragma once

// Canonical modules of invariant rings as twisted invariants, a-invariants,
// and the classification report for small actions.
//
// With S = Sym V* and n = dim V, omega_S = S (x) det(V*) placed in degree n.
// For a small action omega_A = (omega_S (x) lambda^-1)^G, so
// (omega_A)_{n+j} = (S_j (x) chi)^G with chi = det(V*) * lambda^-1.

#include "knopf/constant_group.hpp"
#include "knopf/invariants.hpp"

#include <array>

namespace knopf {

/// Raised when the classification hypotheses cannot be established.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a(A) = -(first nonzero degree of omega_A). When omega_A vanishes on the
/// whole window only the bound a <= upper_bound is known.
struct AInvariant {
  std::optional<long> value;
  long upper_bound = 0;

  bool determined() const { return value.has_value(); }
  std::string str() const {
    return value ? std::to_string(*value) : "<= " + std::to_string(upper_bound) + " (undetermined)";
  }
};

/// omega[j] = dim (omega_A)_{n+j}, j = 0..D.
AInvariant a_invariant_via_omega(const std::vector<long>& omega, int n);

/// deg(numerator) - deg(denominator) of a reduced Hilbert series.
long a_invariant_via_molien(const RationalFunction& h);

/// The numerator N = H * den truncated to the window, checked to have at
/// least deg(den) trailing zero coefficients inside the window. Throws
/// std::invalid_argument("window too small or wrong denominator") otherwise.
Poly reconstruct_rational(const std::vector<long>& coeffs, const Poly& den);
Poly reconstruct_rational(const std::vector<Rational>& coeffs, const Poly& den);

enum class Verdict { Holds, Fails, NotEvaluated };
std::string to_string(Verdict v);

struct Condition {
  Verdict verdict = Verdict::NotEvaluated;
  std::string evidence;
};

struct ClassificationReport {
  int n = 0;
  int window = 0;
  /// "verified", "asserted" or "fails".
  std::string smallness;
  bool outside_hypotheses = false;
  bool det_trivial = false;
  bool lambda_trivial = true;
  /// det(V*) * lambda^-1, the character twisting omega_S.
  bool twist_trivial = false;
  std::string det_v, lambda, twist;
  /// lambda is nontrivial: only the twisted-invariants description of
  /// omega_A is used and the equivalences are not asserted.
  bool watanabe_path = false;
  std::array<Condition, 7> conditions;
  AInvariant a_omega;
  std::optional<long> a_molien;
  std::string hilbert_series;
  std::vector<long> hilbert;  // dim A_d, d = 0..D
  std::vector<long> omega;    // dim (omega_A)_{n+j}, j = 0..D
  bool hilbert_consistent = false;  // omega_A and A(-n) agree on the window
  bool consistency = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  const Condition& condition(int k) const { return conditions.at(k - 1); }
};

struct ClassificationInputs {
  int n = 0;
  int window = 0;
  std::string smallness;
  bool det_trivial = false;
  bool lambda_trivial = true;
  bool twist_trivial = false;
  std::string det_v = "1", lambda = "1", twist = "1";
  std::vector<long> hilbert, omega;
  std::optional<RationalFunction> series;
};

/// Turns Hilbert data and the character bits into condition verdicts.
ClassificationReport assemble_classification(const ClassificationInputs& in);

struct ClassifyOptions {
  bool small_asserted = false;
  /// Degree window; negative means 2n + 4.
  int max_degree = -1;
  int jobs = 1;
};

inline int default_window(int n, int requested) { return requested >= 0 ? requested : 2 * n + 4; }

/// dim (omega_A)_{n+j} = dim (S_j (x) chi)^G for j = 0..D.
template <class K>
std::vector<long> omega_hilbert(std::shared_ptr<SymmetricAlgebra<K>> S, const Vector<K>& chi, int D, int jobs = 1) {
  GradedInvariantRing<K> omega(std::move(S), chi);
  return omega.hilbert(D, jobs);
}

/// The character twisting omega_S: det(V*) * lambda^-1.
template <class K>
Vector<K> omega_twist(const Comodule<K>& V) {
  const FiniteGroupScheme<K>& G = V.scheme();
  const Vector<K> det_dual = det_character(dual_comodule(V));
  const Vector<K> lambda = knop_character(G);
  return G.gamma().multiply(det_dual, grouplike_inverse(G, lambda));
}

/// Classifies the action of G on V. Smallness is verified when `constant`
/// describes G as a matrix group, otherwise it must be asserted.
template <class K>
ClassificationReport classify_small_action(const Comodule<K>& V, const ClassifyOptions& opts,
                                           const MatrixGroup<K>* constant = nullptr) {
  const FiniteGroupScheme<K>& G = V.scheme();
  ClassificationInputs in;
  in.n = V.dim();
  in.window = default_window(in.n, opts.max_degree);
  if (constant) {
    in.smallness = is_small_constant(*constant) ? "verified" : "fails";
  } else if (opts.small_asserted) {
    in.smallness = "asserted";
  } else {
    throw HypothesisError("smallness is only computed for constant groups; assert it explicitly for other schemes");
  }

  const Vector<K> det_v = det_character(V);
  const Vector<K> lambda = knop_character(G);
  const Vector<K> chi = omega_twist(V);
  in.det_trivial = is_trivial_character(G, det_v);
  in.lambda_trivial = is_trivial_character(G, lambda);
  in.twist_trivial = is_trivial_character(G, chi);
  in.det_v = format_element(G.gamma(), det_v);
  in.lambda = format_element(G.gamma(), lambda);
  in.twist = format_element(G.gamma(), chi);

  auto S = std::make_shared<SymmetricAlgebra<K>>(dual_comodule(V));
  S->prepare(in.window);
  GradedInvariantRing<K> A(S);
  in.hilbert = A.hilbert(in.window, opts.jobs);
  in.omega = omega_hilbert(S, chi, in.window, opts.jobs);

  if constexpr (std::is_same_v<K, Rational>) {
    if (constant) in.series = molien_series(*constant);
  }
  return assemble_classification(in);
}

/// Classification of a diagonal mu_m (modulus m) or G_m (modulus 0) action
/// by weight counting. lambda is trivial since the group is abelian. For
/// mu_m smallness is computed as for the cyclic group of order m (m prime to
/// the characteristic); for G_m it must be asserted. `series_denominator`
/// enables the Hilbert series route; for mu_m it defaults to (1 - t^m)^n.
ClassificationReport classify_diagonal_action(const DiagonalizableAction& a, const ClassifyOptions& opts,
                                              std::optional<Poly> series_denominator = {});

/// Faithful with no pseudo-reflections, for mu_m acting with these weights.
bool is_small_diagonal(const DiagonalizableAction& a);

/// Exact Hilbert series of A for a diagonal action with the given
/// denominator, from weight counts on a window long enough to certify it.
RationalFunction diagonal_hilbert_series(const DiagonalizableAction& a, const Poly& den, long chi_weight = 0);

struct GjsReport {
  int n = 0;
  int window = 0;
  std::optional<long> first_degree;  // first nonzero degree of omega_A
  std::optional<long> a_series;      // from the Hilbert series of A, when known
  bool holds = true;                 // a(A) <= -n on every available route
  bool strict = false;               // a(A) < -n
  bool outside_hypotheses = false;
  std::string note;
};

/// a(A) <= -n: the first nonzero degree of omega_A (given as omega[j] =
/// dim (omega_A)_{n+j}) is at least n, and deg of the Hilbert series of A is
/// at most -n when a series is supplied.
GjsReport gjs_inequality_check(const std::vector<long>& omega, int n, bool small,
                               std::optional<RationalFunction> series = {});

template <class K>
GjsReport gjs_inequality_check(const Comodule<K>& V, int D, bool small, int jobs = 1,
                               const MatrixGroup<K>* constant = nullptr) {
  auto S = std::make_shared<SymmetricAlgebra<K>>(dual_comodule(V));
  S->prepare(D);
  std::optional<RationalFunction> series;
  if constexpr (std::is_same_v<K, Rational>) {
    if (constant) series = molien_series(*constant);
  }
  return gjs_inequality_check(omega_hilbert(S, omega_twist(V), D, jobs), V.dim(), small, series);
}

}  // namespace knopf
