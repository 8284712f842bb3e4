#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetafrob {

using BigInt = boost::multiprecision::cpp_int;

/// Numerator L(X) of the zeta function: monic of degree 2g with integer
/// coefficients, stored ascending (coeffs[2g] == 1).
struct LPolynomial {
  std::vector<std::int64_t> coeffs;
  std::uint64_t q = 0;
  int g = 0;

  /// c_i == q^(g-i) * c_(2g-i) for 0 <= i <= g
  bool satisfies_functional_equation() const;
  /// |c_(2g-i)| <= binom(2g, i) q^(i/2) for 1 <= i <= 2g
  bool satisfies_weil_bounds() const;
  /// L(1), the order of the Jacobian.
  BigInt value_at_one() const;
  /// Power sums S_1..S_rmax of the reciprocal roots.
  std::vector<BigInt> power_sums(int rmax) const;
  /// #C(F_(q^r)) = q^r + 1 - S_r
  BigInt point_count(int r) const;
  /// L(-X): the numerator for the quadratic twist.
  LPolynomial twisted() const;

  bool operator==(const LPolynomial& other) const = default;
  std::string to_string() const;
};

BigInt binomial(int n, int k);

/// Fills the bottom half from the top coefficients c_(2g-1)..c_g (given as
/// top[0] = c_(2g-1), ..., top[g-1] = c_g) via the functional equation.
LPolynomial lpoly_from_top(const std::vector<BigInt>& top, std::uint64_t q, int g);

}  // namespace zetafrob
