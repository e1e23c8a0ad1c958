#pragma once

// Exact scalars: arbitrary-precision rationals and prime-field elements.
//
// Every scalar type here satisfies the same small interface (field
// operations, is_zero, inverse, str) so that the linear algebra and the
// Hopf algebra code can be written once as templates on the scalar.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace knopf {

/// Thrown for arithmetic that has no meaning (division by zero, mixing
/// two different prime fields).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

/// The base field k. Either the rationals or F_p for a prime p.
class FieldSpec {
 public:
  struct Rationals {};
  struct PrimeField {
    std::uint32_t p;
  };

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<p>" (also "F<p>", "GF(<p>)").
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return std::holds_alternative<Rationals>(kind_); }
  bool is_prime_field() const { return !is_rational(); }
  /// 0 for the rationals.
  std::uint32_t characteristic() const;
  std::string str() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.characteristic() == b.characteristic();
  }

 private:
  std::variant<Rationals, PrimeField> kind_{Rationals{}};
};

// ---------------------------------------------------------------------------

/// An element of Q, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long long n) : q_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational inverse() const;
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

// ---------------------------------------------------------------------------

/// An element of F_p with the prime carried alongside the value.
///
/// An Fp built from a bare integer (as Eigen does for Scalar(0) and
/// Scalar(1)) is an integer literal not yet bound to a prime; it binds to
/// the prime of whatever bound element it meets first.
class Fp {
 public:
  constexpr Fp() = default;
  Fp(int n) : v_(static_cast<std::uint32_t>(n)), p_(0) {}
  Fp(std::int64_t n, std::uint32_t p);

  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  bool bound() const { return p_ != 0; }
  std::uint32_t prime() const { return p_; }
  /// Canonical representative in 0..p-1 (requires a bound element).
  std::uint32_t value() const;
  /// The residue modulo p, binding a literal if necessary.
  std::uint32_t residue(std::uint32_t p) const;
  std::int32_t literal() const { return static_cast<std::int32_t>(v_); }

  bool is_zero() const { return v_ == 0; }
  Fp inverse() const;
  std::string str() const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a);
  friend bool operator==(const Fp& a, const Fp& b);
  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

// ---------------------------------------------------------------------------

/// Scalar construction and parsing, keyed on the scalar type.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_int(long v, const FieldSpec&) { return Rational(v); }
  static Rational parse(std::string_view s, const FieldSpec&) { return Rational::parse(s); }
  static bool accepts(const FieldSpec& f) { return f.is_rational(); }
};

template <>
struct ScalarTraits<Fp> {
  static Fp from_int(long v, const FieldSpec& f) { return Fp(v, f.characteristic()); }
  static Fp parse(std::string_view s, const FieldSpec& f);
  static bool accepts(const FieldSpec& f) { return f.is_prime_field(); }
};

template <class K>
K scalar(long v, const FieldSpec& f) {
  return ScalarTraits<K>::from_int(v, f);
}

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

/// Calls fn(Rational{}) or fn(Fp{}) according to the field, so that a
/// template lambda can be instantiated for the matching scalar type.
template <class F>
decltype(auto) visit_field(const FieldSpec& field, F&& fn) {
  if (field.is_rational()) return fn(Rational{});
  return fn(Fp{});
}

}  // namespace knopf

namespace Eigen {

template <>
struct NumTraits<knopf::Rational> : GenericNumTraits<knopf::Rational> {
  using Real = knopf::Rational;
  using NonInteger = knopf::Rational;
  using Literal = knopf::Rational;
  using Nested = knopf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 60
  };
};

template <>
struct NumTraits<knopf::Fp> : GenericNumTraits<knopf::Fp> {
  using Real = knopf::Fp;
  using NonInteger = knopf::Fp;
  using Literal = knopf::Fp;
  using Nested = knopf::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
};

}  // namespace Eigen
