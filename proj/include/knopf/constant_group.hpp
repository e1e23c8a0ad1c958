#pragma once

// Finite groups given by matrices: closure, pseudo-reflections, smallness,
// the Molien series, and the passage to a comodule over k^G.

#include "knopf/comodule.hpp"
#include "knopf/polynomial.hpp"

#include <map>

namespace knopf {

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group of invertible n x n matrices. Element 0 is the identity.
template <class K>
class MatrixGroup {
 public:
  /// The group generated by the given matrices.
  static MatrixGroup generated_by(const std::vector<Matrix<K>>& gens, const FieldSpec& field, std::size_t max_order = 5000) {
    if (gens.empty()) throw std::invalid_argument("at least one generator required");
    const Eigen::Index n = gens.front().rows();
    MatrixGroup g;
    g.field_ = field;
    g.elements_.push_back(identity_matrix<K>(n, field));
    std::map<std::string, int> seen{{key(g.elements_[0]), 0}};
    for (std::size_t i = 0; i < g.elements_.size(); ++i)
      for (const auto& s : gens) {
        if (s.rows() != n || s.cols() != n) throw DimensionError("generators must be square of equal size");
        Matrix<K> prod = normalize(Matrix<K>(g.elements_[i] * s), field);
        auto k = key(prod);
        if (seen.count(k)) continue;
        if (g.elements_.size() >= max_order) throw std::invalid_argument("matrix group too large or infinite");
        seen.emplace(k, static_cast<int>(g.elements_.size()));
        g.elements_.push_back(std::move(prod));
      }
    g.build_table(seen);
    return g;
  }

  /// An explicit list of matrices, which must be closed under products.
  /// Repeated matrices are allowed (a non-faithful action): then the abstract
  /// group is taken from `table` when given, otherwise duplicates are an error.
  static MatrixGroup from_list(std::vector<Matrix<K>> mats, const FieldSpec& field,
                               std::optional<FiniteGroup> table = {}) {
    MatrixGroup g;
    g.field_ = field;
    for (auto& m : mats) g.elements_.push_back(normalize(m, field));
    if (table) {
      if (table->order() != static_cast<int>(g.elements_.size()))
        throw std::invalid_argument("group table order differs from the number of matrices");
      for (int a = 0; a < table->order(); ++a)
        for (int b = 0; b < table->order(); ++b)
          if (!equal<K>(normalize(Matrix<K>(g.elements_[a] * g.elements_[b]), field), g.elements_[table->mul(a, b)]))
            throw std::invalid_argument("matrices do not represent the given group table");
      g.group_ = std::make_shared<FiniteGroup>(*table);
      return g;
    }
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < g.elements_.size(); ++i)
      if (!seen.emplace(key(g.elements_[i]), static_cast<int>(i)).second)
        throw std::invalid_argument("repeated matrix in group list; supply a group table for non-faithful actions");
    g.build_table(seen);
    return g;
  }

  int order() const { return static_cast<int>(elements_.size()); }
  int dim() const { return static_cast<int>(elements_.front().rows()); }
  const FieldSpec& field() const { return field_; }
  const std::vector<Matrix<K>>& elements() const { return elements_; }
  const FiniteGroup& group() const { return *group_; }

  /// Distinct group elements act by distinct matrices.
  bool is_faithful() const {
    std::map<std::string, int> seen;
    for (const auto& m : elements_)
      if (!seen.emplace(key(m), 0).second) return false;
    return true;
  }

 private:
  static Matrix<K> normalize(Matrix<K> m, const FieldSpec& f) {
    // bind any literal entries to the field so keys are canonical
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) + scalar<K>(0, f);
    return m;
  }

  static std::string key(const Matrix<K>& m) {
    std::string s;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) s += m(i, j).str() + ",";
    return s;
  }

  void build_table(const std::map<std::string, int>& index) {
    const int n = order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
      names.push_back("g" + std::to_string(a));
      for (int b = 0; b < n; ++b) {
        auto it = index.find(key(normalize(Matrix<K>(elements_[a] * elements_[b]), field_)));
        if (it == index.end()) throw std::invalid_argument("matrix list is not closed under multiplication");
        t[a][b] = it->second;
      }
    }
    names[0] = "1";
    group_ = std::make_shared<FiniteGroup>(std::move(names), std::move(t));
  }

  FieldSpec field_;
  std::vector<Matrix<K>> elements_;
  std::shared_ptr<FiniteGroup> group_;
};

/// Indices of the elements g != 1 with rank(g - I) <= 1.
template <class K>
std::vector<int> pseudo_reflections(const MatrixGroup<K>& G) {
  std::vector<int> out;
  const Matrix<K> id = identity_matrix<K>(G.dim(), G.field());
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.group().identity()) continue;
    const Matrix<K> diff = G.elements()[g] - id;
    if (is_zero<K>(diff)) continue;  // acts trivially; not a reflection
    if (rank<K>(diff, G.field()) <= 1) out.push_back(g);
  }
  return out;
}

/// Faithful and free of pseudo-reflections.
template <class K>
bool is_small_constant(const MatrixGroup<K>& G) {
  return G.is_faithful() && pseudo_reflections(G).empty();
}

/// (1/|G|) sum_g 1/det(I - t g), reduced. Only over Q.
template <class K>
RationalFunction molien_series(const MatrixGroup<K>& G) {
  const std::uint32_t p = G.field().characteristic();
  if (p != 0 && G.order() % static_cast<int>(p) == 0)
    throw UnsupportedError("Molien series undefined in modular characteristic (p divides |G|)");
  if constexpr (!std::is_same_v<K, Rational>) {
    throw UnsupportedError("Molien series is computed for matrices over Q only");
  } else {
    const int n = G.dim();
    std::vector<Rational> xs;
    for (int i = 0; i <= n; ++i) xs.emplace_back(i);
    std::optional<RationalFunction> sum;
    for (const auto& g : G.elements()) {
      std::vector<Rational> ys;
      for (const auto& x : xs) {
        Matrix<Rational> m = identity_matrix<Rational>(n, G.field()) - x * g;
        ys.push_back(determinant<Rational>(m));
      }
      RationalFunction term(Poly(1), Poly::interpolate(xs, ys));
      sum = sum ? *sum + term : term;
    }
    return RationalFunction(sum->num() * Poly(Rational(1, G.order())), sum->den());
  }
}

/// The constant group scheme k^G of the abstract group.
template <class K>
SchemePtr<K> constant_scheme_of(const MatrixGroup<K>& G, std::string label = {}) {
  return constant_group_scheme<K>(G.group(), G.field(), std::move(label));
}

/// V = k^n as a comodule over k^G: gamma_ij = sum_g g_ij e_g.
template <class K>
Comodule<K> matrix_group_comodule(const MatrixGroup<K>& G, SchemePtr<K> scheme) {
  return constant_group_comodule<K>(std::move(scheme), G.elements());
}

}  // namespace knopf
