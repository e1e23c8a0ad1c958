#include "knopf/hopf_constructors.hpp"

namespace knopf {

namespace {

using Mat = std::vector<std::vector<std::uint64_t>>;

std::uint64_t mod(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

Mat mat_mul(const Mat& a, const Mat& b, std::uint32_t p) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    }
  return c;
}

// binomial coefficients mod p for 0 <= k <= n < p
std::uint64_t binom_mod(int n, int k, std::uint32_t p) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num = num * static_cast<std::uint64_t>(n - i) % p;
    den = den * static_cast<std::uint64_t>(i + 1) % p;
  }
  return num * Fp::raw(static_cast<std::uint32_t>(den), p).inverse().value() % p;
}

}  // namespace

LieCheck check_restricted_lie(const RestrictedLieAlgebra& L) {
  const int d = L.dim();
  const std::uint32_t p = L.p;
  LieCheck out;
  auto fail = [&](std::string msg) {
    if (out.ok) out.failure = std::move(msg);
    out.ok = false;
  };
  if (!is_prime(p)) fail("p is not prime");
  if (static_cast<int>(L.bracket.size()) != d || static_cast<int>(L.pmap.size()) != d) {
    fail("bracket or p-map has the wrong size");
    return out;
  }
  for (const auto& row : L.bracket) {
    if (static_cast<int>(row.size()) != d) fail("bracket has the wrong size");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != d) fail("bracket has the wrong size");
  }
  for (const auto& v : L.pmap)
    if (static_cast<int>(v.size()) != d) fail("p-map has the wrong size");
  if (!out.ok) return out;

  auto br = [&](int i, int j, int k) { return mod(L.bracket[i][j][k], p); };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if ((br(i, j, k) + br(j, i, k)) % p != 0)
          fail("bracket not antisymmetric at [" + L.labels[i] + ", " + L.labels[j] + "]");

  // [x_i, [x_j, x_k]] + [x_j, [x_k, x_i]] + [x_k, [x_i, x_j]] = 0
  auto bracket_with = [&](int i, const std::vector<std::uint64_t>& v) {
    std::vector<std::uint64_t> r(d, 0);
    for (int j = 0; j < d; ++j)
      if (v[j])
        for (int k = 0; k < d; ++k) r[k] = (r[k] + v[j] * br(i, j, k)) % p;
    return r;
  };
  auto basis_bracket = [&](int i, int j) {
    std::vector<std::uint64_t> r(d);
    for (int k = 0; k < d; ++k) r[k] = br(i, j, k);
    return r;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        auto a = bracket_with(i, basis_bracket(j, k));
        auto b = bracket_with(j, basis_bracket(k, i));
        auto c = bracket_with(k, basis_bracket(i, j));
        for (int m = 0; m < d; ++m)
          if ((a[m] + b[m] + c[m]) % p != 0)
            fail("Jacobi identity fails on (" + L.labels[i] + ", " + L.labels[j] + ", " + L.labels[k] + ")");
      }

  // ad(x_i)(x_j) = [x_i, x_j]; matrix column j holds that vector
  std::vector<Mat> ad(d, Mat(d, std::vector<std::uint64_t>(d, 0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) ad[i][k][j] = br(i, j, k);
  for (int i = 0; i < d; ++i) {
    Mat power = ad[i];
    for (std::uint32_t e = 1; e < p; ++e) power = mat_mul(power, ad[i], p);
    Mat target(d, std::vector<std::uint64_t>(d, 0));
    for (int k = 0; k < d; ++k) {
      const std::uint64_t c = mod(L.pmap[i][k], p);
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) target[r][s] = (target[r][s] + c * ad[k][r][s]) % p;
    }
    if (power != target) fail("(ad " + L.labels[i] + ")^p != ad(" + L.labels[i] + "^[p])");
  }
  return out;
}

namespace detail {

PbwEngine::PbwEngine(const RestrictedLieAlgebra& L, std::size_t step_limit)
    : L_(L), p_(L.p), d_(L.dim()), step_limit_(step_limit) {
  n_ = 1;
  for (int k = 0; k < d_; ++k) {
    pow_.push_back(n_);
    if (n_ > (1 << 20) / static_cast<int>(p_)) throw std::invalid_argument("u(L) too large");
    n_ *= static_cast<int>(p_);
  }
  memo_.resize(static_cast<std::size_t>(d_) * n_);
  state_.assign(memo_.size(), 0);
}

std::vector<int> PbwEngine::exponents(int index) const {
  std::vector<int> e(d_);
  for (int k = 0; k < d_; ++k) {
    e[k] = index % static_cast<int>(p_);
    index /= static_cast<int>(p_);
  }
  return e;
}

int PbwEngine::index(const std::vector<int>& exps) const {
  int idx = 0;
  for (int k = 0; k < d_; ++k) idx += exps[k] * pow_[k];
  return idx;
}

std::string PbwEngine::label(int index) const {
  auto e = exponents(index);
  std::string s;
  for (int k = 0; k < d_; ++k) {
    if (e[k] == 0) continue;
    s += L_.labels[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

void PbwEngine::add_scaled(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src,
                           std::uint64_t f) const {
  if (f % p_ == 0) return;
  for (int m = 0; m < n_; ++m)
    if (src[m]) dst[m] = static_cast<std::uint32_t>((dst[m] + f * src[m]) % p_);
}

std::vector<std::uint32_t> PbwEngine::generator_times_element(int g, const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> out(n_, 0);
  for (int m = 0; m < n_; ++m)
    if (v[m]) add_scaled(out, times_generator(g, m), v[m]);
  return out;
}

std::vector<std::uint32_t> PbwEngine::linear_times_element(const std::vector<long>& coeffs,
                                                           const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> out(n_, 0);
  for (int k = 0; k < d_; ++k) {
    const std::uint64_t c = mod(coeffs[k], p_);
    if (c) add_scaled(out, generator_times_element(k, v), c);
  }
  return out;
}

const std::vector<std::uint32_t>& PbwEngine::times_generator(int g, int m) {
  const std::size_t key = static_cast<std::size_t>(g) * n_ + m;
  if (state_[key] == 2) return memo_[key];
  if (state_[key] == 1) throw InconsistencyError("PBW straightening does not terminate (cyclic rewrite)");
  if (++steps_ > step_limit_) throw InconsistencyError("PBW straightening exceeded its rewrite step limit");
  state_[key] = 1;

  std::vector<int> a = exponents(m);
  int j = 0;
  while (j < d_ && a[j] == 0) ++j;
  std::vector<std::uint32_t> out(n_, 0);
  if (j >= g) {
    if (a[g] + 1 < static_cast<int>(p_)) {
      a[g] += 1;
      out[index(a)] = 1;
    } else {
      // x_g^p = x_g^[p]
      a[g] = 0;
      std::vector<std::uint32_t> rest(n_, 0);
      rest[index(a)] = 1;
      out = linear_times_element(L_.pmap[g], rest);
    }
  } else {
    // x_g x_j m' = x_j (x_g m') + [x_g, x_j] m'
    a[j] -= 1;
    const int m2 = index(a);
    std::vector<std::uint32_t> t = times_generator(g, m2);
    out = generator_times_element(j, t);
    std::vector<long> br(d_);
    for (int k = 0; k < d_; ++k) br[k] = L_.bracket[g][j][k];
    std::vector<std::uint32_t> base(n_, 0);
    base[m2] = 1;
    add_scaled(out, linear_times_element(br, base), 1);
  }
  memo_[key] = std::move(out);
  state_[key] = 2;
  return memo_[key];
}

std::vector<std::uint32_t> PbwEngine::left_multiply(int monomial, const std::vector<std::uint32_t>& v) {
  auto a = exponents(monomial);
  std::vector<std::uint32_t> out = v;
  for (int k = d_ - 1; k >= 0; --k)
    for (int r = 0; r < a[k]; ++r) out = generator_times_element(k, out);
  return out;
}

std::vector<std::uint32_t> PbwEngine::multiply(int a, int b) {
  std::vector<std::uint32_t> v(n_, 0);
  v[b] = 1;
  return left_multiply(a, v);
}

}  // namespace detail

HopfAlgebra<Fp> restricted_enveloping(const RestrictedLieAlgebra& L) {
  LieCheck chk = check_restricted_lie(L);
  if (!chk.ok) throw std::invalid_argument("not a restricted Lie algebra: " + chk.failure);
  const FieldSpec field = FieldSpec::prime(L.p);
  const std::uint32_t p = L.p;
  detail::PbwEngine eng(L);
  const int n = eng.dim(), d = L.dim();

  std::vector<TensorEntry<Fp>> mult, comult;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto prod = eng.multiply(a, b);
      for (int k = 0; k < n; ++k)
        if (prod[k]) mult.push_back({a, b, k, Fp::raw(prod[k], p)});
    }

  // Delta(x^a) = sum_{i <= a} prod_k C(a_k, i_k) x^i (x) x^{a-i}
  for (int a = 0; a < n; ++a) {
    auto ea = eng.exponents(a);
    for (int i = 0; i < n; ++i) {
      auto ei = eng.exponents(i);
      std::uint64_t c = 1;
      std::vector<int> rest(d);
      bool ok = true;
      for (int k = 0; k < d && ok; ++k) {
        if (ei[k] > ea[k]) ok = false;
        else {
          c = c * binom_mod(ea[k], ei[k], p) % p;
          rest[k] = ea[k] - ei[k];
        }
      }
      if (ok && c) comult.push_back({a, i, eng.index(rest), Fp::raw(static_cast<std::uint32_t>(c), p)});
    }
  }

  HopfAlgebra<Fp> H;
  H.algebra.field = field;
  for (int a = 0; a < n; ++a) H.algebra.labels.push_back(eng.label(a));
  H.algebra.mult = Tensor3<Fp>(n, std::move(mult));
  H.algebra.unit = unit_vector<Fp>(n, 0, field);
  H.comult = Tensor3<Fp>(n, std::move(comult));
  H.counit = unit_vector<Fp>(n, 0, field);

  // S(x_0^{a_0} ... x_{d-1}^{a_{d-1}}) = (-1)^{|a|} x_{d-1}^{a_{d-1}} ... x_0^{a_0}
  H.antipode = zero_matrix<Fp>(n, n, field);
  for (int a = 0; a < n; ++a) {
    auto ea = eng.exponents(a);
    std::vector<std::uint32_t> v(n, 0);
    v[0] = 1;
    int total = 0;
    for (int k = 0; k < d; ++k) {
      std::vector<int> single(d, 0);
      single[k] = ea[k];
      total += ea[k];
      v = eng.left_multiply(eng.index(single), v);
    }
    for (int i = 0; i < n; ++i) {
      Fp c = Fp::raw(v[i], p);
      H.antipode(i, a) = total % 2 ? -c : c;
    }
  }
  return H;
}

RestrictedLieAlgebra affine_line_lie_algebra(std::uint32_t p) {
  RestrictedLieAlgebra L;
  L.p = p;
  L.labels = {"e", "f"};
  L.bracket.assign(2, std::vector<std::vector<long>>(2, std::vector<long>(2, 0)));
  L.bracket[1][0][0] = 1;   // [f, e] = e
  L.bracket[0][1][0] = -1;  // [e, f] = -e
  L.pmap = {{0, 0}, {0, 1}};  // e^[p] = 0, f^[p] = f
  return L;
}

RestrictedLieAlgebra abelian_lie_algebra(std::uint32_t p, int dim) {
  RestrictedLieAlgebra L;
  L.p = p;
  for (int i = 0; i < dim; ++i) L.labels.push_back(dim <= 2 ? std::string(1, "ef"[i]) : "x" + std::to_string(i));
  L.bracket.assign(dim, std::vector<std::vector<long>>(dim, std::vector<long>(dim, 0)));
  L.pmap.assign(dim, std::vector<long>(dim, 0));
  return L;
}

}  // namespace knopf
