#pragma once

// Arithmetic in W(F_q) truncated to p^nwork: the unramified extension Z_q of Z_p
// presented as (Z/p^nwork)[theta]/(lifted modulus), with the p-Frobenius sigma.
//
// Elements are p^val * u where u is a unit mantissa carried to nwork p-adic
// digits. Exact zero has val == kInfVal. Multiplication and integer division
// preserve relative precision; cancellation in addition shifts the mantissa and
// the vacated top digits are zero-filled.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zetafrob/gf.hpp"

namespace zetafrob {

inline constexpr int kInfVal = 1 << 28;

using Mantissa = std::array<std::uint64_t, kMaxExtDegree>;

class ZqContext;
class ZqElement;
using ZqContextPtr = std::shared_ptr<const ZqContext>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

/// p-adic valuation of a nonzero integer and its prime-to-p part.
struct IntSplit {
  int val;
  std::int64_t unit;
};
IntSplit split_p(std::int64_t c, std::uint32_t p);

class ZqContext {
 public:
  /// Requires nwork >= 1 and p^nwork < 2^62.
  static ZqContextPtr make(FieldPtr field, int nwork);

  const FieldDesc& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t p() const { return field_->p(); }
  int n() const { return field_->n(); }
  int nwork() const { return nwork_; }
  /// p^nwork
  std::uint64_t modulus() const { return pw_; }
  /// p^k for 0 <= k <= nwork
  std::uint64_t ppow(int k) const { return ppow_[static_cast<std::size_t>(k)]; }

  /// Least-nonnegative lift of the field modulus, ascending, monic.
  const std::vector<std::uint64_t>& lifted_modulus() const { return lifted_modulus_; }
  /// sigma(theta), a root of the lifted modulus congruent to theta^p.
  const ZqElement& sigma_image() const;
  /// Newton steps spent refining theta^p into sigma_image.
  int newton_steps() const { return newton_steps_; }

  // Mantissa kernels (coordinates mod p^nwork).
  void mul_mantissa(const Mantissa& a, const Mantissa& b, Mantissa& out) const;
  /// sigma^j applied to coordinates, 0 <= j < n (j taken mod n).
  void sigma_mantissa(const Mantissa& a, int j, Mantissa& out) const;
  /// Inverse of a unit mantissa mod p^nwork.
  Mantissa inv_mantissa(const Mantissa& a) const;
  /// Inverse of an integer prime to p, mod p^nwork.
  std::uint64_t inv_int(std::int64_t u) const;

  ZqContext(FieldPtr field, int nwork);  // use make()

 private:
  void init_sigma();

  FieldPtr field_;
  int nwork_;
  std::uint64_t pw_;
  std::vector<std::uint64_t> ppow_;
  std::vector<std::uint64_t> lifted_modulus_;
  std::unique_ptr<ZqElement> sigma_image_;
  int newton_steps_ = 0;
  // sigma_table_[j][i] = coordinates of sigma^j(theta^i)
  std::vector<std::vector<Mantissa>> sigma_table_;
};

class ZqElement {
 public:
  ZqElement() = default;
  /// Exact zero.
  explicit ZqElement(const ZqContext& ctx) : ctx_(&ctx) {}

  static ZqElement from_int(const ZqContext& ctx, std::int64_t v);
  static ZqElement one(const ZqContext& ctx) { return from_int(ctx, 1); }
  /// Least-nonnegative coordinate-wise lift.
  static ZqElement lift(const ZqContext& ctx, const FqElement& a);
  /// p^val * (coordinates), normalized.
  static ZqElement from_parts(const ZqContext& ctx, int val, const Mantissa& mant);
  static ZqElement theta(const ZqContext& ctx);

  const ZqContext& ctx() const { return *ctx_; }
  bool is_zero() const { return val_ == kInfVal; }
  /// p-adic valuation; kInfVal for zero.
  int valuation() const { return val_; }
  const Mantissa& mantissa() const { return m_; }

  ZqElement operator+(const ZqElement& b) const;
  ZqElement operator-(const ZqElement& b) const;
  ZqElement operator*(const ZqElement& b) const;
  ZqElement operator-() const;
  ZqElement& operator+=(const ZqElement& b) { return *this = *this + b; }
  ZqElement& operator-=(const ZqElement& b) { return *this = *this - b; }
  ZqElement& operator*=(const ZqElement& b) { return *this = *this * b; }

  ZqElement inv() const;
  ZqElement pow(std::uint64_t e) const;
  ZqElement mul_int(std::int64_t c) const;
  /// Exact division by a nonzero integer; p-factors lower the valuation.
  ZqElement div_int(std::int64_t c) const;
  /// Multiply by p^k (k may be negative).
  ZqElement shift(int k) const;
  /// sigma^j, j >= 0.
  ZqElement sigma(int j = 1) const;

  /// Reduction to F_q; requires valuation >= 0.
  FqElement reduce() const;
  /// Coordinates of the value mod p^prec; requires valuation >= 0.
  std::vector<std::uint64_t> residue(int prec) const;
  /// a == b mod p^prec
  bool congruent(const ZqElement& b, int prec) const;

  std::string to_string() const;

 private:
  void normalize();

  const ZqContext* ctx_ = nullptr;
  int val_ = kInfVal;
  Mantissa m_{};
};

/// Dense polynomial over the truncated ring, ascending, exact-zero tail trimmed.
class ZqPoly {
 public:
  ZqPoly() = default;
  explicit ZqPoly(const ZqContext& ctx) : ctx_(&ctx) {}
  ZqPoly(const ZqContext& ctx, std::vector<ZqElement> coeffs);

  static ZqPoly lift(const ZqContext& ctx, const FqPoly& f);
  static ZqPoly monomial(const ZqElement& c, int k);
  static ZqPoly constant(const ZqElement& c) { return monomial(c, 0); }

  const ZqContext& ctx() const { return *ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  ZqElement coeff(int i) const;
  ZqElement leading() const { return coeff(degree()); }
  const std::vector<ZqElement>& coeffs() const { return c_; }
  /// Sets coefficient i (grows as needed, trims afterwards).
  void set_coeff(int i, const ZqElement& v);
  /// Minimum coefficient valuation; kInfVal for zero.
  int valuation() const;

  ZqPoly operator+(const ZqPoly& b) const;
  ZqPoly operator-(const ZqPoly& b) const;
  ZqPoly operator*(const ZqPoly& b) const;
  ZqPoly operator*(const ZqElement& s) const;
  ZqPoly operator-() const;
  ZqPoly& operator+=(const ZqPoly& b);
  ZqPoly& operator-=(const ZqPoly& b) { return *this += -b; }

  ZqPoly mul_int(std::int64_t c) const;
  ZqPoly div_int(std::int64_t c) const;
  /// Multiply by x^k.
  ZqPoly shift_x(int k) const;
  ZqPoly derivative() const;
  /// sigma^j applied coefficient-wise.
  ZqPoly sigma(int j = 1) const;
  /// f(x^k)
  ZqPoly compose_power(int k) const;
  ZqPoly pow(unsigned e) const;
  /// Keeps terms of degree < k.
  ZqPoly truncate(int k) const;

  FqPoly reduce() const;
  bool congruent(const ZqPoly& b, int prec) const;
  std::string to_string() const;

 private:
  void trim();

  const ZqContext* ctx_ = nullptr;
  std::vector<ZqElement> c_;
};

/// Division by a polynomial whose leading coefficient is exactly 1.
std::pair<ZqPoly, ZqPoly> divmod_monic(const ZqPoly& a, const ZqPoly& b);

}  // namespace zetafrob
