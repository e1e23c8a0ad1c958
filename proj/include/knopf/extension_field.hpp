#pragma once

// Finite extension fields F_{p^k}, used only where a prime field is too
// small to host enough distinct evaluation points (nondegeneracy search).

#include "knopf/scalar.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace knopf {

inline constexpr int kMaxExtensionDegree = 16;

/// F_p[x]/(f) for a monic irreducible f of the requested degree.
class GfContext {
 public:
  GfContext(std::uint32_t p, int degree);

  std::uint32_t p() const { return p_; }
  int degree() const { return k_; }
  /// Coefficients f_0..f_k of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Number of field elements, saturated at 2^62.
  std::uint64_t size() const;

  /// Smallest degree k with p^k > bound.
  static int degree_exceeding(std::uint32_t p, std::uint64_t bound);

 private:
  std::uint32_t p_;
  int k_;
  std::vector<std::uint32_t> modulus_;
};

class Gf {
 public:
  Gf() = default;
  Gf(int literal) : lit_(literal) {}
  /// The element whose base-p digits (low first) are those of index.
  static Gf from_index(const GfContext& ctx, std::uint64_t index);
  static Gf from_base(const GfContext& ctx, std::uint32_t v);

  bool is_zero() const;
  Gf inverse() const;
  std::string str() const;

  Gf& operator+=(const Gf& o);
  Gf& operator-=(const Gf& o);
  Gf& operator*=(const Gf& o);
  Gf& operator/=(const Gf& o) { return *this *= o.inverse(); }
  friend Gf operator+(Gf a, const Gf& b) { return a += b; }
  friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
  friend Gf operator*(Gf a, const Gf& b) { return a *= b; }
  friend Gf operator/(Gf a, const Gf& b) { return a /= b; }
  friend Gf operator-(const Gf& a) { return Gf(0) - a; }
  friend bool operator==(const Gf& a, const Gf& b);
  friend bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }

 private:
  const GfContext* ctx_ = nullptr;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
  std::int32_t lit_ = 0;

  Gf bound_to(const GfContext* ctx) const;
  static const GfContext* common(const Gf& a, const Gf& b);
};

inline bool is_zero(const Gf& x) { return x.is_zero(); }

}  // namespace knopf

namespace Eigen {

template <>
struct NumTraits<knopf::Gf> : GenericNumTraits<knopf::Gf> {
  using Real = knopf::Gf;
  using NonInteger = knopf::Gf;
  using Literal = knopf::Gf;
  using Nested = knopf::Gf;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 64
  };
};

}  // namespace Eigen
