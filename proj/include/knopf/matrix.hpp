#pragma once

// Dense exact linear algebra over any exact scalar type.
//
// Eigen supplies the containers; all elimination is done here with exact
// first-nonzero pivoting. There is no tolerance anywhere.

#include "knopf/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace knopf {

template <class K>
using Matrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Elimination arithmetic. The generic version works on K directly; the F_p
// version strips the scalars down to raw residues with one fixed prime.
template <class K>
struct ElimField {
  using Elem = K;
  explicit ElimField(const FieldSpec&) {}
  Elem from(const K& x) const { return x; }
  K to(const Elem& e) const { return e; }
  bool zero(const Elem& e) const { return is_zero(e); }
  Elem one() const { return K(1); }
  Elem inv(const Elem& e) const { return e.inverse(); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  // dst[j] -= f * src[j] for j in [begin, n)
  void axpy(Elem* dst, const Elem* src, const Elem& f, std::size_t begin, std::size_t n) const {
    for (std::size_t j = begin; j < n; ++j)
      if (!is_zero(src[j])) dst[j] -= f * src[j];
  }
  void scale(Elem* row, const Elem& f, std::size_t begin, std::size_t n) const {
    for (std::size_t j = begin; j < n; ++j) row[j] *= f;
  }
};

template <>
struct ElimField<Fp> {
  using Elem = std::uint32_t;
  std::uint32_t p;
  explicit ElimField(const FieldSpec& f) : p(f.characteristic()) {
    if (p == 0) throw ArithmeticError("F_p elimination needs a prime field");
  }
  Elem from(const Fp& x) const { return x.residue(p); }
  Fp to(Elem e) const { return Fp::raw(e, p); }
  bool zero(Elem e) const { return e == 0; }
  Elem one() const { return 1; }
  Elem inv(Elem e) const { return Fp::raw(e, p).inverse().value(); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  void axpy(Elem* dst, const Elem* src, Elem f, std::size_t begin, std::size_t n) const {
    const std::uint64_t g = p - f;  // dst += (p - f) * src
    for (std::size_t j = begin; j < n; ++j)
      if (src[j]) dst[j] = static_cast<Elem>((dst[j] + g * src[j]) % p);
  }
  void scale(Elem* row, Elem f, std::size_t begin, std::size_t n) const {
    for (std::size_t j = begin; j < n; ++j) row[j] = static_cast<Elem>(std::uint64_t{row[j]} * f % p);
  }
};

}  // namespace detail

/// Field of a matrix's entries: Q for rationals, otherwise the prime of the
/// first bound F_p entry. Matrices made only of unbound literals have no
/// recoverable field.
template <class K>
std::optional<FieldSpec> infer_field(const Matrix<K>& m) {
  if constexpr (std::is_same_v<K, Rational>) {
    return FieldSpec::rationals();
  } else if constexpr (std::is_same_v<K, Fp>) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (m(i, j).bound()) return FieldSpec::prime(m(i, j).prime());
    return std::nullopt;
  } else {
    return FieldSpec::rationals();  // generic scalars ignore the spec
  }
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are added one at a time; the stored rows stay fully reduced with
/// leading entry 1, sorted by pivot column. Adding stops being useful once
/// full() is true.
template <class K>
class RowEchelon {
  using EF = detail::ElimField<K>;
  using Elem = typename EF::Elem;

 public:
  RowEchelon(std::size_t cols, const FieldSpec& field) : cols_(cols), ef_(field) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rank() == cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Returns true if the row was independent of the rows seen so far.
  template <class Derived>
  bool add(const Eigen::MatrixBase<Derived>& row) {
    if (static_cast<std::size_t>(row.size()) != cols_) throw DimensionError("row length mismatch");
    std::vector<Elem> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = ef_.from(row(static_cast<Eigen::Index>(j)));
    return add_elems(std::move(r));
  }

  bool add(const std::vector<K>& row) {
    if (row.size() != cols_) throw DimensionError("row length mismatch");
    std::vector<Elem> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = ef_.from(row[j]);
    return add_elems(std::move(r));
  }

  /// Adds every row of m.
  void add_rows(const Matrix<K>& m) {
    for (Eigen::Index i = 0; i < m.rows() && !full(); ++i) add(m.row(i));
  }

  /// Whether v lies in the row space.
  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    std::vector<Elem> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = ef_.from(v(static_cast<Eigen::Index>(j)));
    reduce(r);
    return std::all_of(r.begin(), r.end(), [&](const Elem& e) { return ef_.zero(e); });
  }

  /// The reduced rows, rank x cols.
  Matrix<K> basis() const {
    Matrix<K> m(static_cast<Eigen::Index>(rank()), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = ef_.to(rows_[i][j]);
    return m;
  }

  /// Basis of {v : row . v = 0 for every row}, itself in reduced echelon form.
  std::vector<Vector<K>> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    RowEchelon<K> out(cols_, ef_);
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Elem> v(cols_, Elem(0));
      v[f] = ef_.one();
      for (std::size_t r = 0; r < rank(); ++r) v[pivots_[r]] = ef_.neg(rows_[r][f]);
      out.add_elems(std::move(v));
    }
    std::vector<Vector<K>> result;
    for (std::size_t i = 0; i < out.rank(); ++i) {
      Vector<K> v(static_cast<Eigen::Index>(cols_));
      for (std::size_t j = 0; j < cols_; ++j) v(j) = ef_.to(out.rows_[i][j]);
      result.push_back(std::move(v));
    }
    return result;
  }

  /// Entry (r, c) of the reduced basis.
  K at(std::size_t r, std::size_t c) const { return ef_.to(rows_[r][c]); }

 private:
  RowEchelon(std::size_t cols, const EF& ef) : cols_(cols), ef_(ef) {}

  void reduce(std::vector<Elem>& r) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem f = r[pivots_[i]];
      if (!ef_.zero(f)) ef_.axpy(r.data(), rows_[i].data(), f, pivots_[i], cols_);
    }
  }

  bool add_elems(std::vector<Elem> r) {
    reduce(r);
    std::size_t lead = 0;
    while (lead < cols_ && ef_.zero(r[lead])) ++lead;
    if (lead == cols_) return false;
    ef_.scale(r.data(), ef_.inv(r[lead]), lead, cols_);
    for (auto& row : rows_) {
      const Elem f = row[lead];
      if (!ef_.zero(f)) ef_.axpy(row.data(), r.data(), f, lead, cols_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
  }

  std::size_t cols_;
  EF ef_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

template <class K>
FieldSpec field_of(const Matrix<K>& m) {
  if (auto f = infer_field(m)) return *f;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) throw ArithmeticError("cannot infer the prime field of an unbound matrix");
  return FieldSpec::prime(2);  // zero matrix: any prime gives the same answer
}

}  // namespace detail

template <class K>
Matrix<K> rref(const Matrix<K>& m, const FieldSpec& field) {
  RowEchelon<K> e(static_cast<std::size_t>(m.cols()), field);
  e.add_rows(m);
  Matrix<K> out = Matrix<K>::Zero(m.rows(), m.cols());
  Matrix<K> b = e.basis();
  out.topRows(b.rows()) = b;
  return out;
}

template <class K>
Matrix<K> rref(const Matrix<K>& m) {
  return rref(m, detail::field_of(m));
}

template <class K>
std::size_t rank(const Matrix<K>& m, const FieldSpec& field) {
  RowEchelon<K> e(static_cast<std::size_t>(m.cols()), field);
  e.add_rows(m);
  return e.rank();
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rank(m, detail::field_of(m));
}

/// Basis of {v : Mv = 0} in reduced echelon form (leading entry 1,
/// increasing leading positions). Size is cols - rank.
template <class K>
std::vector<Vector<K>> kernel_basis(const Matrix<K>& m, const FieldSpec& field) {
  RowEchelon<K> e(static_cast<std::size_t>(m.cols()), field);
  e.add_rows(m);
  return e.kernel();
}

template <class K>
std::vector<Vector<K>> kernel_basis(const Matrix<K>& m) {
  return kernel_basis(m, detail::field_of(m));
}

/// Some x with Mx = b, free variables set to zero; nullopt if inconsistent.
template <class K>
std::optional<Vector<K>> solve(const Matrix<K>& m, const Vector<K>& b, const FieldSpec& field) {
  if (b.size() != m.rows()) throw DimensionError("solve: rhs length does not match row count");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RowEchelon<K> e(static_cast<std::size_t>(aug.cols()), field);
  e.add_rows(aug);
  const auto last = static_cast<std::size_t>(m.cols());
  Vector<K> x = Vector<K>::Zero(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const auto c = e.pivots()[r];
    if (c == last) return std::nullopt;
    x(static_cast<Eigen::Index>(c)) = e.at(r, last);
  }
  if constexpr (std::is_same_v<K, Fp>) {
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Fp::raw(x(i).residue(field.characteristic()), field.characteristic());
  }
  return x;
}

template <class K>
std::optional<Vector<K>> solve(const Matrix<K>& m, const Vector<K>& b) {
  Matrix<K> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  return solve(m, b, detail::field_of(aug));
}

/// (M (x) N)(v (x) w) = (Mv) (x) (Nw), with v (x) w indexed i * dim(w) + j.
template <class K>
Matrix<K> kronecker(const Matrix<K>& m, const Matrix<K>& n) {
  Matrix<K> out(m.rows() * n.rows(), m.cols() * n.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.block(i * n.rows(), j * n.cols(), n.rows(), n.cols()) = m(i, j) * n;
  return out;
}

template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  K det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return K(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const K inv = m(c, c).inverse();
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const K f = m(r, c) * inv;
      for (Eigen::Index j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class K>
bool is_zero(const Matrix<K>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class K>
bool equal(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class K>
Vector<K> unit_vector(Eigen::Index n, Eigen::Index i, const FieldSpec& f) {
  Vector<K> v = Vector<K>::Constant(n, scalar<K>(0, f));
  v(i) = scalar<K>(1, f);
  return v;
}

template <class K>
Vector<K> zero_vector(Eigen::Index n, const FieldSpec& f) {
  return Vector<K>::Constant(n, scalar<K>(0, f));
}

template <class K>
Matrix<K> zero_matrix(Eigen::Index r, Eigen::Index c, const FieldSpec& f) {
  return Matrix<K>::Constant(r, c, scalar<K>(0, f));
}

template <class K>
Matrix<K> identity_matrix(Eigen::Index n, const FieldSpec& f) {
  Matrix<K> m = zero_matrix<K>(n, n, f);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = scalar<K>(1, f);
  return m;
}

}  // namespace knopf
