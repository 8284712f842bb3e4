#include "zetafrob/lpoly.hpp"

#include <limits>
#include <sstream>

#include "zetafrob/error.hpp"

namespace zetafrob {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

BigInt ipow(std::uint64_t base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

bool LPolynomial::satisfies_functional_equation() const {
  if (static_cast<int>(coeffs.size()) != 2 * g + 1 || coeffs.back() != 1) return false;
  for (int i = 0; i <= g; ++i)
    if (BigInt(coeffs[i]) != ipow(q, g - i) * coeffs[2 * g - i]) return false;
  return true;
}

bool LPolynomial::satisfies_weil_bounds() const {
  if (static_cast<int>(coeffs.size()) != 2 * g + 1) return false;
  for (int i = 1; i <= 2 * g; ++i) {
    const BigInt c = coeffs[2 * g - i];
    const BigInt b = binomial(2 * g, i);
    if (c * c > b * b * ipow(q, i)) return false;
  }
  return true;
}

BigInt LPolynomial::value_at_one() const {
  BigInt s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

std::vector<BigInt> LPolynomial::power_sums(int rmax) const {
  const int D = 2 * g;
  // elementary symmetric functions of the reciprocal roots
  std::vector<BigInt> e(static_cast<std::size_t>(D) + 1);
  for (int r = 0; r <= D; ++r) e[r] = (r % 2 ? -1 : 1) * BigInt(coeffs[D - r]);
  std::vector<BigInt> s(static_cast<std::size_t>(rmax) + 1);
  for (int r = 1; r <= rmax; ++r) {
    BigInt acc = 0;
    for (int i = 1; i < r && i <= D; ++i) acc += ((i - 1) % 2 ? -1 : 1) * e[i] * s[r - i];
    if (r <= D) acc += ((r - 1) % 2 ? -1 : 1) * BigInt(r) * e[r];
    s[r] = acc;
  }
  s.erase(s.begin());
  return s;
}

BigInt LPolynomial::point_count(int r) const {
  return ipow(q, r) + 1 - power_sums(r).back();
}

LPolynomial LPolynomial::twisted() const {
  LPolynomial t = *this;
  for (std::size_t i = 1; i < t.coeffs.size(); i += 2) t.coeffs[i] = -t.coeffs[i];
  return t;
}

std::string LPolynomial::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i];
  os << "]";
  return os.str();
}

LPolynomial lpoly_from_top(const std::vector<BigInt>& top, std::uint64_t q, int g) {
  if (static_cast<int>(top.size()) != g)
    throw Error(ErrorCode::InvalidArgument, "expected g top coefficients");
  std::vector<BigInt> c(static_cast<std::size_t>(2 * g) + 1);
  c[2 * g] = 1;
  for (int i = 1; i <= g; ++i) c[2 * g - i] = top[i - 1];
  for (int i = 0; i < g; ++i) c[i] = ipow(q, g - i) * c[2 * g - i];
  LPolynomial L;
  L.q = q;
  L.g = g;
  for (const auto& v : c) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw Error(ErrorCode::Unsupported, "L-polynomial coefficient exceeds 64 bits");
    L.coeffs.push_back(static_cast<std::int64_t>(v));
  }
  return L;
}

}  // namespace zetafrob
