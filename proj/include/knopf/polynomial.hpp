#pragma once

// Univariate polynomials and rational functions over Q, used for Hilbert
// and Molien series.

#include "knopf/scalar.hpp"

#include <string>
#include <vector>

namespace knopf {

/// Dense polynomial, coefficient i is the coefficient of t^i. Trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(Rational c) : Poly(std::vector<Rational>{std::move(c)}) {}
  Poly(int c) : Poly(Rational(c)) {}

  /// c * t^e
  static Poly monomial(Rational c, int e);
  /// 1 - t^e
  static Poly one_minus_t_power(int e);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational operator[](int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;
  Rational eval(const Rational& x) const;
  Poly pow(int e) const;
  /// Same polynomial with the coefficient order reversed (t^deg f(1/t)).
  Poly reversed() const;
  bool is_palindromic() const;
  std::string str(const std::string& var = "t") const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd (zero if both are zero).
  static Poly gcd(Poly a, Poly b);
  /// Polynomial through (xs[i], ys[i]), Lagrange interpolation.
  static Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// num/den in lowest terms, normalized so that den(0) = 1.
class RationalFunction {
 public:
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  /// deg num - deg den
  int degree() const { return num_.degree() - den_.degree(); }
  /// Power series coefficients of t^0..t^(count-1).
  std::vector<Rational> series(int count) const;
  std::string str() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_, den_;
};

}  // namespace knopf
