#pragma once

// Finite fields F_q = F_p[t]/(m(t)) for odd p, and polynomials over them.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zetafrob {

/// Largest supported extension degree n of F_q over F_p.
inline constexpr int kMaxExtDegree = 8;

class FieldDesc;
class FqElement;
using FieldPtr = std::shared_ptr<const FieldDesc>;

/// Builds and validates F_q. `modulus` is ascending (constant first) and must be
/// monic of degree n and irreducible over F_p; it may be omitted only when n == 1.
FieldPtr make_field(std::uint64_t p, int n,
                    std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

bool is_prime(std::uint64_t n);

class FieldDesc {
 public:
  std::uint32_t p() const { return p_; }
  int n() const { return n_; }
  std::uint64_t q() const { return q_; }
  /// Ascending coefficients of the monic defining polynomial, size n + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(std::int64_t v) const;
  /// Coordinates in the power basis {1, t, ..., t^(n-1)}, reduced mod p.
  FqElement from_coords(std::span<const std::int64_t> coords) const;
  /// The class of t.
  FqElement generator() const;

  /// Enumeration order used by the oracle: base-p digits of `index` are the coordinates.
  FqElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FqElement& a) const;

  /// Raw coordinate product (out may alias neither input).
  void mul_coords(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;

  bool same_as(const FieldDesc& other) const {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
  }

 private:
  friend FieldPtr make_field(std::uint64_t, int, std::optional<std::vector<std::uint64_t>>);
  FieldDesc(std::uint32_t p, int n, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  int n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

class FqElement {
 public:
  using Coords = std::array<std::uint32_t, kMaxExtDegree>;

  FqElement() = default;
  explicit FqElement(const FieldDesc& field) : field_(&field) {}

  const FieldDesc& field() const;
  std::uint32_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Coords& coords() const { return c_; }
  Coords& coords() { return c_; }

  bool is_zero() const;
  bool is_one() const;

  FqElement operator+(const FqElement& b) const;
  FqElement operator-(const FqElement& b) const;
  FqElement operator*(const FqElement& b) const;
  FqElement operator-() const;
  FqElement& operator+=(const FqElement& b) { return *this = *this + b; }
  FqElement& operator-=(const FqElement& b) { return *this = *this - b; }
  FqElement& operator*=(const FqElement& b) { return *this = *this * b; }

  FqElement inv() const;
  FqElement pow(std::uint64_t e) const;
  /// a -> a^p
  FqElement frobenius() const;
  /// Euler criterion; zero counts as a square.
  bool is_square() const;

  bool operator==(const FqElement& b) const;
  std::string to_string() const;

 private:
  void check_same(const FqElement& b) const;

  const FieldDesc* field_ = nullptr;
  Coords c_{};
};

/// Dense univariate polynomial over F_q, ascending coefficients, trimmed.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(const FieldDesc& field) : field_(&field) {}
  FqPoly(const FieldDesc& field, std::vector<FqElement> coeffs);

  static FqPoly monomial(const FqElement& c, int k);
  static FqPoly x(const FieldDesc& field) { return monomial(field.one(), 1); }

  const FieldDesc& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FqElement coeff(int i) const;
  FqElement leading() const;
  const std::vector<FqElement>& coeffs() const { return c_; }

  FqPoly operator+(const FqPoly& b) const;
  FqPoly operator-(const FqPoly& b) const;
  FqPoly operator*(const FqPoly& b) const;
  FqPoly operator*(const FqElement& s) const;
  FqPoly operator-() const;

  FqPoly derivative() const;
  FqPoly monic() const;
  FqElement eval(const FqElement& x) const;

  bool operator==(const FqPoly& b) const;
  std::string to_string() const;

 private:
  void trim();

  const FieldDesc* field_ = nullptr;
  std::vector<FqElement> c_;
};

/// Quotient and remainder; `b` must be nonzero.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);

/// Monic gcd. Throws BothZero when both inputs vanish.
FqPoly poly_gcd(const FqPoly& a, const FqPoly& b);

struct Xgcd {
  FqPoly g, s, t;  // s*a + t*b = g, g monic
};
Xgcd poly_xgcd(const FqPoly& a, const FqPoly& b);

FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& mod);

/// gcd(Q, Q') == 1. Requires deg Q >= 3.
bool is_separable(const FqPoly& Q);

/// Irreducibility over the coefficient field via gcd(x^(q^i) - x, f) = 1 for
/// i < deg f and x^(q^deg f) == x mod f.
bool is_irreducible(const FqPoly& f);

}  // namespace zetafrob
