#include "knopf/extension_field.hpp"

#include <sstream>

namespace knopf {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a modulo the monic polynomial m, both low-first over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        std::uint64_t sub = std::uint64_t{lead} * m[i] % p;
        std::uint32_t& t = a[shift + i];
        t = static_cast<std::uint32_t>((t + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Coeffs& d, const Coeffs& f, std::uint32_t p) {
  Coeffs r = poly_mod(f, d, p);
  for (auto c : r)
    if (c != 0) return false;
  return true;
}

// Brute force: f of degree k is irreducible iff no monic polynomial of
// degree 1..k/2 divides it. Only used for tiny p^(k/2).
bool irreducible(const Coeffs& f, std::uint32_t p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(d + 1);
      std::uint64_t x = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

GfContext::GfContext(std::uint32_t p, int degree) : p_(p), k_(degree) {
  if (!is_prime(p)) throw std::invalid_argument("GF: characteristic not prime");
  if (degree < 1 || degree > kMaxExtensionDegree) throw std::invalid_argument("GF: unsupported degree");
  if (degree == 1) {
    modulus_ = {0, 1};
    return;
  }
  // Enumerate monic polynomials in index order; the first irreducible one wins.
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(degree + 1);
    std::uint64_t x = idx;
    for (int i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    f[degree] = 1;
    if (f[0] == 0) continue;
    if (irreducible(f, p)) {
      modulus_ = f;
      return;
    }
  }
  throw std::logic_error("GF: no irreducible polynomial found");
}

std::uint64_t GfContext::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < k_; ++i) {
    if (s > (std::uint64_t{1} << 62) / p_) return std::uint64_t{1} << 62;
    s *= p_;
  }
  return s;
}

int GfContext::degree_exceeding(std::uint32_t p, std::uint64_t bound) {
  std::uint64_t s = 1;
  int k = 0;
  while (s <= bound) {
    s *= p;
    ++k;
  }
  return std::max(k, 1);
}

Gf Gf::from_index(const GfContext& ctx, std::uint64_t index) {
  Gf g;
  g.ctx_ = &ctx;
  for (int i = 0; i < ctx.degree(); ++i) {
    g.c_[i] = static_cast<std::uint32_t>(index % ctx.p());
    index /= ctx.p();
  }
  return g;
}

Gf Gf::from_base(const GfContext& ctx, std::uint32_t v) {
  Gf g;
  g.ctx_ = &ctx;
  g.c_[0] = v % ctx.p();
  return g;
}

Gf Gf::bound_to(const GfContext* ctx) const {
  if (ctx_ || !ctx) return *this;
  std::int64_t r = lit_ % static_cast<std::int64_t>(ctx->p());
  if (r < 0) r += ctx->p();
  return from_base(*ctx, static_cast<std::uint32_t>(r));
}

const GfContext* Gf::common(const Gf& a, const Gf& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw ArithmeticError("mixing two extension fields");
  return a.ctx_ ? a.ctx_ : b.ctx_;
}

bool Gf::is_zero() const {
  if (!ctx_) return lit_ == 0;
  for (int i = 0; i < ctx_->degree(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Gf& Gf::operator+=(const Gf& o) {
  const GfContext* ctx = common(*this, o);
  if (!ctx) {
    lit_ += o.lit_;
    return *this;
  }
  *this = bound_to(ctx);
  Gf b = o.bound_to(ctx);
  for (int i = 0; i < ctx->degree(); ++i) c_[i] = static_cast<std::uint32_t>((std::uint64_t{c_[i]} + b.c_[i]) % ctx->p());
  return *this;
}

Gf& Gf::operator-=(const Gf& o) {
  const GfContext* ctx = common(*this, o);
  if (!ctx) {
    lit_ -= o.lit_;
    return *this;
  }
  *this = bound_to(ctx);
  Gf b = o.bound_to(ctx);
  for (int i = 0; i < ctx->degree(); ++i) c_[i] = (c_[i] + ctx->p() - b.c_[i]) % ctx->p();
  return *this;
}

Gf& Gf::operator*=(const Gf& o) {
  const GfContext* ctx = common(*this, o);
  if (!ctx) {
    lit_ *= o.lit_;
    return *this;
  }
  Gf a = bound_to(ctx), b = o.bound_to(ctx);
  const int k = ctx->degree();
  const std::uint32_t p = ctx->p();
  Coeffs prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < k; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p);
  }
  Coeffs r = poly_mod(std::move(prod), ctx->modulus(), p);
  Gf out;
  out.ctx_ = ctx;
  for (int i = 0; i < k && i < static_cast<int>(r.size()); ++i) out.c_[i] = r[i];
  *this = out;
  return *this;
}

Gf Gf::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in extension field");
  if (!ctx_) {
    if (lit_ == 1 || lit_ == -1) return *this;
    throw ArithmeticError("inverse of unbound extension-field literal");
  }
  // a^(q-2)
  std::uint64_t e = ctx_->size() - 2;
  Gf base = *this, r = from_base(*ctx_, 1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const Gf& a, const Gf& b) { return (a - b).is_zero(); }

std::string Gf::str() const {
  if (!ctx_) return std::to_string(lit_);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < ctx_->degree(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

}  // namespace knopf
