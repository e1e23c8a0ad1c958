#pragma once

// Integrals, unimodularity and the modular element of a Hopf algebra.

#include "knopf/hopf.hpp"

namespace knopf {

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

template <class K>
struct IntegralSpace {
  Side side;
  /// Always exactly one vector, normalized so its first nonzero entry is 1.
  std::vector<Vector<K>> basis;

  const Vector<K>& generator() const { return basis.front(); }
};

/// {x : b_i x = eps(b_i) x for all i} (left) or {x : x b_i = eps(b_i) x}
/// (right). Throws InconsistencyError unless the space is a line.
template <class K>
IntegralSpace<K> integrals(const HopfAlgebra<K>& H, Side side) {
  const int n = H.dim();
  Matrix<K> sys = zero_matrix<K>(n * n, n, H.field());
  for (int i = 0; i < n; ++i) {
    Matrix<K> m = side == Side::Left ? H.algebra.left_mult(i) : H.algebra.right_mult(i);
    for (int r = 0; r < n; ++r) m(r, r) -= H.counit(i);
    sys.block(i * n, 0, n, n) = m;
  }
  IntegralSpace<K> out{side, kernel_basis<K>(sys, H.field())};
  if (out.basis.size() != 1)
    throw InconsistencyError(std::string(to_string(side)) + " integral space has dimension " +
                             std::to_string(out.basis.size()) + ", expected 1 (invalid Hopf data?)");
  return out;
}

/// Left and right integrals span the same line.
template <class K>
bool is_unimodular(const HopfAlgebra<K>& H) {
  return equal<K>(integrals(H, Side::Left).generator(), integrals(H, Side::Right).generator());
}

/// The algebra map alpha : H -> k with Lambda h = alpha(h) Lambda for a left
/// integral Lambda, as its values on the basis.
template <class K>
Vector<K> modular_element(const HopfAlgebra<K>& H) {
  const Vector<K> lambda = integrals(H, Side::Left).generator();
  const int n = H.dim();
  int pivot = 0;
  while (is_zero(lambda(pivot))) ++pivot;
  Vector<K> alpha(n);
  for (int j = 0; j < n; ++j) {
    const Vector<K> prod = H.multiply(lambda, H.algebra.basis_vector(j));
    alpha(j) = prod(pivot);  // lambda(pivot) = 1
    if (!equal<K>(prod, alpha(j) * lambda))
      throw InconsistencyError("left integral times " + H.labels()[j] + " is not proportional to the integral");
  }
  if (!(H.apply_counit(H.unit()) == H.algebra.one()) || !(alpha.dot(H.unit()) == H.algebra.one()))
    throw InconsistencyError("modular element is not unital");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector<K> ij = H.multiply(H.algebra.basis_vector(i), H.algebra.basis_vector(j));
      if (!(alpha.dot(ij) == alpha(i) * alpha(j)))
        throw InconsistencyError("modular element is not multiplicative on (" + H.labels()[i] + ", " +
                                 H.labels()[j] + ")");
    }
  return alpha;
}

}  // namespace knopf
