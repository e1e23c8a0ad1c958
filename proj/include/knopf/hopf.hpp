#pragma once

// Finite-dimensional algebras and Hopf algebras given by structure constants.
//
// Conventions (basis b_0..b_{n-1}):
//   b_i b_j = sum_k mult(i,j,k) b_k
//   Delta(b_i) = sum_{j,k} comult(i,j,k) b_j (x) b_k
//   S(b_j) = sum_i antipode(i,j) b_i
// Elements of H (x) H are n x n matrices X with X(j,k) the coefficient of
// b_j (x) b_k.

#include "knopf/matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace knopf {

/// Raised when input data violates an invariant the computation relies on
/// (for example an integral space that is not a line).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class K>
struct TensorEntry {
  int i, j, k;
  K c;
};

/// Sparse n x n x n tensor with entries sorted by (i, j, k).
template <class K>
class Tensor3 {
 public:
  Tensor3() = default;
  /// Duplicate positions are summed, zeros dropped.
  Tensor3(int n, std::vector<TensorEntry<K>> entries) : n_(n) {
    for (const auto& e : entries)
      if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= n || e.j >= n || e.k >= n)
        throw DimensionError("structure constant index out of range");
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (auto& e : entries) {
      if (!e_.empty() && e_.back().i == e.i && e_.back().j == e.j && e_.back().k == e.k) {
        e_.back().c += e.c;
        if (is_zero(e_.back().c)) e_.pop_back();
      } else if (!is_zero(e.c)) {
        e_.push_back(std::move(e));
      }
    }
    offsets_.assign(static_cast<std::size_t>(n) * n + 1, 0);
    for (const auto& e : e_) ++offsets_[static_cast<std::size_t>(e.i) * n + e.j + 1];
    for (std::size_t s = 1; s < offsets_.size(); ++s) offsets_[s] += offsets_[s - 1];
  }

  int dim() const { return n_; }
  const std::vector<TensorEntry<K>>& entries() const { return e_; }

  /// Entries with the given (i, j), in increasing k.
  auto slice(int i, int j) const {
    const std::size_t s = static_cast<std::size_t>(i) * n_ + j;
    return std::make_pair(e_.begin() + offsets_[s], e_.begin() + offsets_[s + 1]);
  }
  /// Entries with the given i.
  auto slice(int i) const {
    const std::size_t s = static_cast<std::size_t>(i) * n_;
    return std::make_pair(e_.begin() + offsets_[s], e_.begin() + offsets_[s + n_]);
  }

  K at(int i, int j, int k) const {
    auto [b, e] = slice(i, j);
    for (auto it = b; it != e; ++it)
      if (it->k == k) return it->c;
    return K(0);
  }

  /// The tensor with index positions permuted: out(p(i,j,k)) = this(i,j,k),
  /// where perm gives the new position of each old index.
  Tensor3 permuted(int pi, int pj, int pk) const {
    std::vector<TensorEntry<K>> out;
    out.reserve(e_.size());
    for (const auto& e : e_) {
      int idx[3];
      idx[pi] = e.i;
      idx[pj] = e.j;
      idx[pk] = e.k;
      out.push_back({idx[0], idx[1], idx[2], e.c});
    }
    return Tensor3(n_, std::move(out));
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    if (a.n_ != b.n_ || a.e_.size() != b.e_.size()) return false;
    for (std::size_t s = 0; s < a.e_.size(); ++s) {
      const auto &x = a.e_[s], &y = b.e_[s];
      if (x.i != y.i || x.j != y.j || x.k != y.k || !(x.c == y.c)) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::vector<TensorEntry<K>> e_;
  std::vector<std::size_t> offsets_;
};

/// A finite-dimensional unital algebra.
template <class K>
struct Algebra {
  FieldSpec field;
  std::vector<std::string> labels;
  Tensor3<K> mult;
  Vector<K> unit;

  int dim() const { return mult.dim(); }
  K zero() const { return scalar<K>(0, field); }
  K one() const { return scalar<K>(1, field); }
  Vector<K> basis_vector(int i) const { return unit_vector<K>(dim(), i, field); }
  Vector<K> zero_vector() const { return knopf::zero_vector<K>(dim(), field); }

  Vector<K> multiply(const Vector<K>& x, const Vector<K>& y) const {
    Vector<K> out = zero_vector();
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      for (int j = 0; j < dim(); ++j) {
        if (is_zero(y(j))) continue;
        const K f = x(i) * y(j);
        auto [b, e] = mult.slice(i, j);
        for (auto it = b; it != e; ++it) out(it->k) += f * it->c;
      }
    }
    return out;
  }

  /// Matrix of x -> b_i x.
  Matrix<K> left_mult(int i) const {
    Matrix<K> m = zero_matrix<K>(dim(), dim(), field);
    for (auto [b, e] = mult.slice(i); b != e; ++b) m(b->k, b->j) += b->c;
    return m;
  }

  /// Matrix of x -> x b_i.
  Matrix<K> right_mult(int i) const {
    Matrix<K> m = zero_matrix<K>(dim(), dim(), field);
    for (const auto& t : mult.entries())
      if (t.j == i) m(t.k, t.i) += t.c;
    return m;
  }

  bool is_commutative() const {
    for (const auto& t : mult.entries())
      if (!(mult.at(t.j, t.i, t.k) == t.c)) return false;
    return true;
  }
};

template <class K>
struct HopfAlgebra {
  Algebra<K> algebra;
  Tensor3<K> comult;
  Vector<K> counit;
  Matrix<K> antipode;

  int dim() const { return algebra.dim(); }
  const FieldSpec& field() const { return algebra.field; }
  const std::vector<std::string>& labels() const { return algebra.labels; }
  const Vector<K>& unit() const { return algebra.unit; }

  Vector<K> multiply(const Vector<K>& x, const Vector<K>& y) const { return algebra.multiply(x, y); }

  /// Delta(x) as an n x n matrix.
  Matrix<K> comultiply(const Vector<K>& x) const {
    Matrix<K> out = zero_matrix<K>(dim(), dim(), field());
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      for (auto [b, e] = comult.slice(i); b != e; ++b) out(b->j, b->k) += x(i) * b->c;
    }
    return out;
  }

  K apply_counit(const Vector<K>& x) const {
    K r = algebra.zero();
    for (int i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) r += x(i) * counit(i);
    return r;
  }

  Vector<K> apply_antipode(const Vector<K>& x) const { return antipode * x; }

  bool is_commutative() const { return algebra.is_commutative(); }
  bool is_cocommutative() const {
    for (const auto& t : comult.entries())
      if (!(comult.at(t.i, t.k, t.j) == t.c)) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::string witness;  // empty when ok
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c.ok;
    return false;
  }
};

namespace detail {

template <class K>
std::string label(const Algebra<K>& a, int i) {
  return i < static_cast<int>(a.labels.size()) ? a.labels[i] : "b" + std::to_string(i);
}

// x (x) y products in H (x) H: (sum X(a,b) b_a (x) b_b)(sum Y(c,d) b_c (x) b_d)
template <class K>
Matrix<K> tensor_square_multiply(const Algebra<K>& A, const Matrix<K>& X, const Matrix<K>& Y) {
  const int n = A.dim();
  Matrix<K> out = zero_matrix<K>(n, n, A.field);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (is_zero(X(a, b))) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (is_zero(Y(c, d))) continue;
          const K f = X(a, b) * Y(c, d);
          auto [b1, e1] = A.mult.slice(a, c);
          auto [b2, e2] = A.mult.slice(b, d);
          for (auto p = b1; p != e1; ++p)
            for (auto q = b2; q != e2; ++q) out(p->k, q->k) += f * p->c * q->c;
        }
    }
  return out;
}

}  // namespace detail

/// Associativity and unit axioms of a plain algebra.
template <class K>
void check_algebra_axioms(const Algebra<K>& A, AxiomReport& report) {
  const int n = A.dim();
  AxiomCheck assoc{"associativity", true, {}};
  for (int i = 0; i < n && assoc.ok; ++i)
    for (int j = 0; j < n && assoc.ok; ++j) {
      const Vector<K> ij = A.multiply(A.basis_vector(i), A.basis_vector(j));
      for (int k = 0; k < n; ++k) {
        const Vector<K> bk = A.basis_vector(k);
        if (!equal<K>(A.multiply(ij, bk), A.multiply(A.basis_vector(i), A.multiply(A.basis_vector(j), bk)))) {
          assoc.ok = false;
          assoc.witness = "(" + detail::label(A, i) + " " + detail::label(A, j) + ") " + detail::label(A, k) +
                          " != " + detail::label(A, i) + " (" + detail::label(A, j) + " " + detail::label(A, k) + ")";
          break;
        }
      }
    }
  report.checks.push_back(assoc);

  AxiomCheck unit{"unit", true, {}};
  if (A.unit.size() != n) {
    unit.ok = false;
    unit.witness = "unit vector has wrong length";
  }
  for (int i = 0; i < n && unit.ok; ++i) {
    const Vector<K> bi = A.basis_vector(i);
    if (!equal<K>(A.multiply(A.unit, bi), bi) || !equal<K>(A.multiply(bi, A.unit), bi)) {
      unit.ok = false;
      unit.witness = "1 * " + detail::label(A, i) + " or " + detail::label(A, i) + " * 1 differs from " +
                     detail::label(A, i);
    }
  }
  report.checks.push_back(unit);
}

template <class K>
AxiomReport verify_axioms(const HopfAlgebra<K>& H) {
  AxiomReport report;
  const Algebra<K>& A = H.algebra;
  const int n = H.dim();
  if (H.counit.size() != n || H.antipode.rows() != n || H.antipode.cols() != n || H.comult.dim() != n) {
    report.checks.push_back({"dimensions", false, "counit, comultiplication or antipode has the wrong size"});
    return report;
  }
  check_algebra_axioms(A, report);

  // (Delta (x) id) Delta = (id (x) Delta) Delta, compared as dense n^3 arrays
  AxiomCheck coassoc{"coassociativity", true, {}};
  for (int i = 0; i < n && coassoc.ok; ++i) {
    std::vector<K> lhs(static_cast<std::size_t>(n) * n * n, A.zero()), rhs = lhs;
    for (auto [b, e] = H.comult.slice(i); b != e; ++b) {
      for (auto [b2, e2] = H.comult.slice(b->j); b2 != e2; ++b2)
        lhs[(static_cast<std::size_t>(b2->j) * n + b2->k) * n + b->k] += b->c * b2->c;
      for (auto [b2, e2] = H.comult.slice(b->k); b2 != e2; ++b2)
        rhs[(static_cast<std::size_t>(b->j) * n + b2->j) * n + b2->k] += b->c * b2->c;
    }
    for (std::size_t s = 0; s < lhs.size(); ++s)
      if (!(lhs[s] == rhs[s])) {
        coassoc.ok = false;
        coassoc.witness = "at Delta(" + detail::label(A, i) + "), component (" + detail::label(A, int(s / n / n)) +
                          ", " + detail::label(A, int(s / n % n)) + ", " + detail::label(A, int(s % n)) + ")";
        break;
      }
  }
  report.checks.push_back(coassoc);

  AxiomCheck counit{"counit", true, {}};
  for (int i = 0; i < n && counit.ok; ++i) {
    Vector<K> left = A.zero_vector(), right = A.zero_vector();
    for (auto [b, e] = H.comult.slice(i); b != e; ++b) {
      left(b->k) += H.counit(b->j) * b->c;
      right(b->j) += H.counit(b->k) * b->c;
    }
    const Vector<K> bi = A.basis_vector(i);
    if (!equal<K>(left, bi) || !equal<K>(right, bi)) {
      counit.ok = false;
      counit.witness = "(eps (x) id) Delta or (id (x) eps) Delta differs from identity on " + detail::label(A, i);
    }
  }
  report.checks.push_back(counit);

  AxiomCheck delta_alg{"comultiplication_multiplicative", true, {}};
  {
    if (!equal<K>(H.comultiply(A.unit), A.unit * A.unit.transpose())) {
      delta_alg.ok = false;
      delta_alg.witness = "Delta(1) != 1 (x) 1";
    }
    std::vector<Matrix<K>> deltas;
    for (int i = 0; i < n; ++i) deltas.push_back(H.comultiply(A.basis_vector(i)));
    for (int i = 0; i < n && delta_alg.ok; ++i)
      for (int j = 0; j < n; ++j) {
        const Vector<K> ij = A.multiply(A.basis_vector(i), A.basis_vector(j));
        if (!equal<K>(H.comultiply(ij), detail::tensor_square_multiply(A, deltas[i], deltas[j]))) {
          delta_alg.ok = false;
          delta_alg.witness = "Delta(" + detail::label(A, i) + " " + detail::label(A, j) + ") != Delta(" +
                              detail::label(A, i) + ") Delta(" + detail::label(A, j) + ")";
          break;
        }
      }
  }
  report.checks.push_back(delta_alg);

  AxiomCheck eps_alg{"counit_multiplicative", true, {}};
  if (!(H.apply_counit(A.unit) == A.one())) {
    eps_alg.ok = false;
    eps_alg.witness = "eps(1) != 1";
  }
  for (int i = 0; i < n && eps_alg.ok; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector<K> ij = A.multiply(A.basis_vector(i), A.basis_vector(j));
      if (!(H.apply_counit(ij) == H.counit(i) * H.counit(j))) {
        eps_alg.ok = false;
        eps_alg.witness = "eps(" + detail::label(A, i) + " " + detail::label(A, j) + ") != eps(" +
                          detail::label(A, i) + ") eps(" + detail::label(A, j) + ")";
        break;
      }
    }
  report.checks.push_back(eps_alg);

  AxiomCheck anti{"antipode", true, {}};
  for (int i = 0; i < n && anti.ok; ++i) {
    Vector<K> left = A.zero_vector(), right = A.zero_vector();
    for (auto [b, e] = H.comult.slice(i); b != e; ++b) {
      const Vector<K> bj = A.basis_vector(b->j), bk = A.basis_vector(b->k);
      left += b->c * A.multiply(H.apply_antipode(bj), bk);
      right += b->c * A.multiply(bj, H.apply_antipode(bk));
    }
    const Vector<K> expect = H.counit(i) * A.unit;
    if (!equal<K>(left, expect) || !equal<K>(right, expect)) {
      anti.ok = false;
      anti.witness = "m(S (x) id)Delta or m(id (x) S)Delta differs from eps on " + detail::label(A, i);
    }
  }
  report.checks.push_back(anti);
  return report;
}

/// Solves the antipode axiom for S. Throws if there is no solution or it is
/// not unique.
template <class K>
Matrix<K> solve_antipode(const Algebra<K>& A, const Tensor3<K>& comult, const Vector<K>& counit) {
  const int n = A.dim();
  const int vars = n * n;  // S(i, j) at i * n + j
  Matrix<K> sys = zero_matrix<K>(2 * vars, vars, A.field);
  Vector<K> rhs = zero_vector<K>(2 * vars, A.field);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      rhs(l * n + m) = counit(l) * A.unit(m);
      rhs(vars + l * n + m) = counit(l) * A.unit(m);
    }
    for (auto [b, e] = comult.slice(l); b != e; ++b) {
      const int j = b->j, k = b->k;
      // sum_i S(i,j) b_i b_k
      for (int i = 0; i < n; ++i)
        for (auto [b2, e2] = A.mult.slice(i, k); b2 != e2; ++b2) sys(l * n + b2->k, i * n + j) += b->c * b2->c;
      // sum_i b_j S(i,k) b_i
      for (int i = 0; i < n; ++i)
        for (auto [b2, e2] = A.mult.slice(j, i); b2 != e2; ++b2) sys(vars + l * n + b2->k, i * n + k) += b->c * b2->c;
    }
  }
  RowEchelon<K> ech(static_cast<std::size_t>(vars), A.field);
  ech.add_rows(sys);
  if (ech.rank() != static_cast<std::size_t>(vars))
    throw InconsistencyError("antipode is not determined uniquely by the antipode axiom");
  auto x = solve<K>(sys, rhs, A.field);
  if (!x) throw InconsistencyError("no antipode satisfies the antipode axiom");
  Matrix<K> S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S(i, j) = (*x)(i * n + j);
  return S;
}

/// Assembles a Hopf algebra; the antipode is solved for when omitted.
template <class K>
HopfAlgebra<K> make_hopf(Algebra<K> A, Tensor3<K> comult, Vector<K> counit, std::optional<Matrix<K>> antipode = {}) {
  if (comult.dim() != A.dim() || counit.size() != A.dim()) throw DimensionError("Hopf data dimensions disagree");
  HopfAlgebra<K> H;
  H.antipode = antipode ? std::move(*antipode) : solve_antipode(A, comult, counit);
  H.algebra = std::move(A);
  H.comult = std::move(comult);
  H.counit = std::move(counit);
  return H;
}

/// The dual Hopf algebra on the dual basis b*_i (labels get a '*').
template <class K>
HopfAlgebra<K> dual(const HopfAlgebra<K>& H) {
  HopfAlgebra<K> D;
  D.algebra.field = H.field();
  for (const auto& l : H.labels()) {
    if (l.size() > 1 && l.back() == '*')
      D.algebra.labels.push_back(l.substr(0, l.size() - 1));
    else
      D.algebra.labels.push_back(l + "*");
  }
  // b*_j b*_k = sum_i comult(i,j,k) b*_i ; Delta(b*_k) = sum_{i,j} mult(i,j,k) b*_i (x) b*_j
  D.algebra.mult = H.comult.permuted(2, 0, 1);
  D.comult = H.algebra.mult.permuted(1, 2, 0);
  D.algebra.unit = H.counit;
  D.counit = H.unit();
  D.antipode = H.antipode.transpose();
  return D;
}

template <class K>
bool structurally_equal(const HopfAlgebra<K>& a, const HopfAlgebra<K>& b) {
  return a.dim() == b.dim() && a.algebra.mult == b.algebra.mult && a.comult == b.comult &&
         equal<K>(a.unit(), b.unit()) && equal<K>(a.counit, b.counit) && equal<K>(a.antipode, b.antipode);
}

/// H1 (x) H2 with basis b_i (x) c_j at index i * dim(H2) + j.
template <class K>
HopfAlgebra<K> tensor_product(const HopfAlgebra<K>& H1, const HopfAlgebra<K>& H2) {
  if (!(H1.field() == H2.field())) throw std::invalid_argument("tensor product over different fields");
  const int n1 = H1.dim(), n2 = H2.dim(), n = n1 * n2;
  auto idx = [n2](int i, int j) { return i * n2 + j; };
  std::vector<TensorEntry<K>> mult, comult;
  for (const auto& a : H1.algebra.mult.entries())
    for (const auto& b : H2.algebra.mult.entries()) mult.push_back({idx(a.i, b.i), idx(a.j, b.j), idx(a.k, b.k), a.c * b.c});
  for (const auto& a : H1.comult.entries())
    for (const auto& b : H2.comult.entries()) comult.push_back({idx(a.i, b.i), idx(a.j, b.j), idx(a.k, b.k), a.c * b.c});
  HopfAlgebra<K> H;
  H.algebra.field = H1.field();
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) H.algebra.labels.push_back(H1.labels()[i] + "|" + H2.labels()[j]);
  H.algebra.mult = Tensor3<K>(n, std::move(mult));
  H.comult = Tensor3<K>(n, std::move(comult));
  H.algebra.unit = kronecker<K>(H1.unit(), H2.unit());
  H.counit = kronecker<K>(H1.counit, H2.counit);
  H.antipode = kronecker<K>(H1.antipode, H2.antipode);
  return H;
}

}  // namespace knopf
