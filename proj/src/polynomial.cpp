#include "knopf/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace knopf {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(e) + 1);
  v[e] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::one_minus_t_power(int e) { return Poly(1) - monomial(1, e); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Poly Poly::reversed() const { return Poly(std::vector<Rational>(c_.rbegin(), c_.rend())); }

bool Poly::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j--; ++i)
    if (c_[i] != c_[j]) return false;
  return true;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    bool neg = c < Rational(0);
    Rational a = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || a != Rational(1)) os << a.str();
    if (i > 0) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  const Rational inv = b.leading().inverse();
  std::vector<Rational> q(a.degree() >= db ? a.degree() - db + 1 : 0);
  for (int i = a.degree(); i >= db; --i) {
    Rational f = rem[i] * inv;
    if (f.is_zero()) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = a.leading().inverse();
  for (auto& c : a.c_) c *= inv;
  return a;
}

Poly Poly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Poly(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result += basis * Poly(ys[i] / denom);
  }
  return result;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  Poly g = Poly::gcd(num, den);
  if (!g.is_zero() && g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  Rational d0 = den[0];
  if (d0.is_zero()) throw ArithmeticError("denominator vanishes at t = 0");
  Poly scale(d0.inverse());
  num_ = num * scale;
  den_ = den * scale;
}

std::vector<Rational> RationalFunction::series(int count) const {
  // den(0) = 1, so s_i = num_i - sum_{j>=1} den_j s_{i-j}
  std::vector<Rational> s(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    Rational v = num_[i];
    for (int j = 1; j <= den_.degree() && j <= i; ++j) v -= den_[j] * s[i - j];
    s[i] = v;
  }
  return s;
}

std::string RationalFunction::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  Poly g = Poly::gcd(a.den_, b.den_);
  Poly bd = Poly::divmod(b.den_, g).first;
  Poly ad = Poly::divmod(a.den_, g).first;
  return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

}  // namespace knopf
