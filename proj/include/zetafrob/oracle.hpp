#pragma once

// Brute-force point counting over F_(q^r) and the L-polynomial it determines.

#include <array>
#include <cstdint>
#include <vector>

#include "zetafrob/exec.hpp"
#include "zetafrob/gf.hpp"
#include "zetafrob/lpoly.hpp"

namespace zetafrob {

/// F_(q^r) = F_q[u]/(h) with h a seeded random monic irreducible of degree r.
/// Elements are flattened: coefficient j of u^j occupies coords [j*n, (j+1)*n).
class ExtensionField {
 public:
  static constexpr int kMaxCoords = 32;
  using Elem = std::array<std::uint32_t, kMaxCoords>;

  ExtensionField(FieldPtr base, int r, std::uint64_t seed);

  const FieldDesc& base() const { return *base_; }
  int degree() const { return r_; }
  std::uint64_t size() const { return size_; }
  const FqPoly& modulus() const { return h_; }

  Elem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Elem& a) const;
  Elem embed(const FqElement& c) const;
  bool is_zero(const Elem& a) const;

  void add(const Elem& a, const Elem& b, Elem& out) const;
  void mul(const Elem& a, const Elem& b, Elem& out) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  /// Horner evaluation of sum coeffs[i] x^i.
  Elem eval(const std::vector<Elem>& coeffs, const Elem& x) const;

 private:
  FieldPtr base_;
  int r_;
  int n_;
  std::uint64_t size_;
  FqPoly h_;
  std::vector<Elem> h_low_;  // -h_j embedded, j < r, as F_q coordinate blocks
};

struct CountVector {
  std::vector<std::uint64_t> counts;  // #C(F_(q^r)) for r = 1..g
  std::uint64_t q = 0;
  int g = 0;
};

inline constexpr std::uint64_t kDefaultCountLimit = 10'000'000;

/// #C(F_(q^r)) for y^2 = Q(x) (any leading coefficient), including the points
/// at infinity of the smooth model. Parallel looks values up in a table of
/// squares; Serial is the reference version using the Euler criterion.
std::uint64_t count_points(const FieldPtr& field, const FqPoly& Q, int r, std::uint64_t seed = 1,
                           Exec exec = Exec::Parallel, std::uint64_t limit = kDefaultCountLimit);

CountVector count_vector(const FieldPtr& field, const FqPoly& Q, std::uint64_t seed = 1,
                         Exec exec = Exec::Parallel, std::uint64_t limit = kDefaultCountLimit);

/// Newton's identities over Q on S_r = q^r + 1 - N_r. Throws NonIntegralCoefficient.
LPolynomial lpoly_from_counts(const CountVector& counts);

LPolynomial oracle_lpoly(const FieldPtr& field, const FqPoly& Q, std::uint64_t seed = 1,
                         Exec exec = Exec::Parallel, std::uint64_t limit = kDefaultCountLimit);

}  // namespace zetafrob
