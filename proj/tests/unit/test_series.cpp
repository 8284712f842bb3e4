#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "support.hpp"

using namespace zetafrob;
using boost::multiprecision::cpp_rational;

namespace {

LiftedCurve lifted(const FieldPtr& F, const FqPoly& Q, int nwork) {
  return LiftedCurve::make(normalize_model(F, Q), ZqContext::make(F, nwork));
}

int vp(BigInt x, int p) {
  int v = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("binom(-1/2, j) is p-integral for odd p") {
  cpp_rational b = 1;
  for (int j = 1; j <= 20; ++j) {
    b = b * cpp_rational(-1 - 2 * (j - 1), 2 * j);
    // (-1)^j binom(2j, j) / 4^j
    const cpp_rational closed = cpp_rational((j % 2 ? -1 : 1) * binomial(2 * j, j), BigInt(1) << (2 * j));
    CHECK(b == closed);
    BigInt den = denominator(b);
    while (den % 2 == 0) den /= 2;
    CHECK(den == 1);
    for (int p : {3, 5, 7}) CHECK(vp(denominator(b), p) == 0);
  }
}

TEST_CASE("Q^sigma(x^p) is congruent to Q^p mod p") {
  std::mt19937_64 rng(1);
  for (auto [p, n, d] : {std::tuple{3, 1, 5}, {3, 2, 6}, {5, 2, 5}, {7, 1, 4}}) {
    auto F = ztest::field(p, n);
    const LiftedCurve lc = lifted(F, ztest::random_curve(*F, d, rng), 8);
    const ZqPoly delta = lc.Q.sigma(1).compose_power(p) - lc.Q.pow(static_cast<unsigned>(p));
    CHECK(delta.valuation() >= 1);
    CHECK(delta.degree() < p * d);
  }
}

TEST_CASE("series is trivial when the difference vanishes mod p^nwork") {
  auto F = make_field(5, 1);
  const LiftedCurve lc = lifted(F, ztest::poly(*F, {1, 2, 0, 1}), 1);
  const BasisChoice b = basis_for(Basis::B1, 3);
  const auto A = frobenius_y_series(lc, 0, plan_with_nwork(5, 1, 1, 3, b, 1));
  CHECK(A[0].congruent(ZqPoly::constant(ZqElement::one(*lc.ctx)), 1));
  for (std::size_t m = 1; m < A.size(); ++m) CHECK(A[m].is_zero());
}

TEST_CASE("series coefficients") {
  std::mt19937_64 rng(2);
  for (auto [p, d, k] : {std::tuple{3, 5, 1}, {5, 5, 0}, {3, 6, 0}, {7, 3, 0}}) {
    auto F = make_field(p, 1);
    const LiftedCurve lc = lifted(F, ztest::random_curve(*F, d, rng), 12);
    const PrecisionPlan plan = plan_with_nwork(p, 1, (d - 1) / 2, d, basis_for(k ? Basis::B2 : Basis::B1, d), 12);
    const auto A = frobenius_y_series(lc, k, plan);
    CHECK(A[0].congruent(ZqPoly::constant(ZqElement::one(*lc.ctx)), 12));
    for (std::size_t m = 1; m < A.size(); ++m) {
      CHECK(A[m].degree() < d);
      // A_m collects terms p^j Z^j that reach y^(-2m) only when m <= p j
      const int jmin = (static_cast<int>(m) + p - 1) / p;
      if (!A[m].is_zero()) CHECK(A[m].valuation() >= jmin);
    }
  }
}

TEST_CASE("Frobenius images") {
  std::mt19937_64 rng(3);
  for (auto [p, d] : {std::pair{3, 5}, {3, 7}, {5, 5}, {3, 6}, {5, 6}}) {
    auto F = make_field(p, 1);
    const LiftedCurve lc = lifted(F, ztest::random_curve(*F, d, rng), 10);
    for (int k : {0, 1}) {
      const BasisChoice basis = basis_for(k ? Basis::B2 : Basis::B1, d);
      const PrecisionPlan plan = plan_with_nwork(p, 1, (d - 1) / 2, d, basis, 10);
      const auto A = frobenius_y_series(lc, k, plan);
      for (int i = 1; i < d; ++i) {
        const DiffForm f = frobenius_image(lc, i, k, A, plan);
        const int lowest = std::max(1, (2 * k + 1) * p - 2 * ((p * i - 1) / d));
        for (const auto& [m, S] : f.terms) {
          CHECK(m % 2 == 1);
          CHECK(m >= lowest);
          CHECK(m <= plan.tail_bound);
          CHECK(S.valuation() >= 1);
          if (m > 1) CHECK(S.degree() < d);
          if (k == 1) CHECK(m >= p + 2);
        }
      }
    }
  }
}

TEST_CASE("leading term of a Frobenius image is p x^(pi-1)") {
  auto F = make_field(5, 1);
  const LiftedCurve lc = lifted(F, ztest::poly(*F, {2, 1, 3, 0, 0, 1}), 8);
  const ZqContext& R = *lc.ctx;
  const PrecisionPlan plan = plan_with_nwork(5, 1, 2, 5, basis_for(Basis::B1, 5), 8);
  const std::vector<ZqPoly> only_one{ZqPoly::constant(ZqElement::one(R))};
  for (int i = 1; i < 5; ++i) {
    const DiffForm f = frobenius_image(lc, i, 0, only_one, plan);
    const ZqPoly lead = ZqPoly::monomial(ZqElement::from_int(R, 5), 5 * i - 1);
    CHECK(f.terms.at(5).congruent(divmod_monic(lead, lc.Q).second, 8));
  }
}
