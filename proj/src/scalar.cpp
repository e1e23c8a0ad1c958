#include "knopf/scalar.hpp"

#include <charconv>
#include <cctype>

namespace knopf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("prime must be below 2^31");
  FieldSpec f;
  f.kind_ = PrimeField{p};
  return f;
}

namespace {

std::uint32_t parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not an unsigned integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  for (std::string_view prefix : {"Fp:", "F_", "GF(", "F"}) {
    if (text.substr(0, prefix.size()) == prefix) {
      auto rest = text.substr(prefix.size());
      if (prefix == "GF(" && !rest.empty() && rest.back() == ')') rest.remove_suffix(1);
      return prime(parse_uint(rest));
    }
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::uint32_t FieldSpec::characteristic() const {
  if (auto* pf = std::get_if<PrimeField>(&kind_)) return pf->p;
  return 0;
}

std::string FieldSpec::str() const {
  if (is_rational()) return "Q";
  return "Fp:" + std::to_string(characteristic());
}

// ---------------------------------------------------------------------------

Rational::Rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw ArithmeticError("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(10); }

// ---------------------------------------------------------------------------

namespace {

std::uint32_t reduce(std::int64_t n, std::uint32_t p) {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t common_prime(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw ArithmeticError("mixing F_" + std::to_string(a) + " and F_" + std::to_string(b));
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::int64_t checked_literal(std::int64_t v) {
  if (v > INT32_MAX || v < INT32_MIN) throw ArithmeticError("unbound F_p literal overflow");
  return v;
}

}  // namespace

Fp::Fp(std::int64_t n, std::uint32_t p) : p_(p) {
  if (p == 0)
    v_ = static_cast<std::uint32_t>(static_cast<std::int32_t>(checked_literal(n)));
  else
    v_ = reduce(n, p);
}

std::uint32_t Fp::value() const {
  if (!bound()) throw ArithmeticError("F_p literal not bound to a prime");
  return v_;
}

std::uint32_t Fp::residue(std::uint32_t p) const {
  if (bound()) {
    if (p_ != p) throw ArithmeticError("mixing F_" + std::to_string(p_) + " and F_" + std::to_string(p));
    return v_;
  }
  return reduce(literal(), p);
}

Fp Fp::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in F_p");
  if (!bound()) {
    if (literal() == 1 || literal() == -1) return *this;
    throw ArithmeticError("inverse of unbound F_p literal");
  }
  return raw(pow_mod(v_, p_ - 2, p_), p_);
}

std::string Fp::str() const {
  if (!bound()) return std::to_string(literal());
  return std::to_string(v_);
}

Fp& Fp::operator+=(const Fp& o) {
  std::uint32_t p = common_prime(p_, o.p_);
  if (p == 0) {
    v_ = static_cast<std::uint32_t>(static_cast<std::int32_t>(
        checked_literal(std::int64_t{literal()} + o.literal())));
    return *this;
  }
  std::uint64_t s = std::uint64_t{residue(p)} + o.residue(p);
  v_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
  p_ = p;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  std::uint32_t p = common_prime(p_, o.p_);
  if (p == 0) {
    v_ = static_cast<std::uint32_t>(static_cast<std::int32_t>(
        checked_literal(std::int64_t{literal()} - o.literal())));
    return *this;
  }
  std::uint32_t a = residue(p), b = o.residue(p);
  v_ = a >= b ? a - b : a + (p - b);
  p_ = p;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  std::uint32_t p = common_prime(p_, o.p_);
  if (p == 0) {
    v_ = static_cast<std::uint32_t>(static_cast<std::int32_t>(
        checked_literal(std::int64_t{literal()} * o.literal())));
    return *this;
  }
  v_ = static_cast<std::uint32_t>(std::uint64_t{residue(p)} * o.residue(p) % p);
  p_ = p;
  return *this;
}

Fp operator-(const Fp& a) {
  if (!a.bound()) return Fp(-a.literal());
  return Fp::raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_);
}

bool operator==(const Fp& a, const Fp& b) {
  std::uint32_t p = common_prime(a.p_, b.p_);
  if (p == 0) return a.v_ == b.v_;
  return a.residue(p) == b.residue(p);
}

Fp ScalarTraits<Fp>::parse(std::string_view s, const FieldSpec& f) {
  // Rational literals are accepted and mapped into F_p (denominator inverted).
  Rational q = Rational::parse(s);
  std::uint32_t p = f.characteristic();
  mpz_class num = q.value().get_num() % p;
  mpz_class den = q.value().get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw ArithmeticError("denominator divisible by p in '" + std::string(s) + "'");
  Fp n(static_cast<std::int64_t>(num.get_si()), p);
  Fp d(static_cast<std::int64_t>(den.get_si()), p);
  return n / d;
}

}  // namespace knopf
