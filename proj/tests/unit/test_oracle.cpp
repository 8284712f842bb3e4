#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "support.hpp"
#include "zetafrob/error.hpp"
#include "zetafrob/oracle.hpp"

using namespace zetafrob;

namespace {

// Direct enumeration over a prime field with integer arithmetic.
std::uint64_t naive_count(std::uint64_t p, const std::vector<std::int64_t>& q) {
  std::vector<int> roots(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) roots[y * y % p] += 1;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::int64_t v = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) v = ((v * static_cast<std::int64_t>(x) + *it) % static_cast<std::int64_t>(p) + p) % p;
    count += roots[static_cast<std::size_t>(v)];
  }
  const int d = static_cast<int>(q.size()) - 1;
  if (d % 2) return count + 1;
  const auto lead = static_cast<std::uint64_t>(((q.back() % static_cast<std::int64_t>(p)) + p) % p);
  return count + (roots[lead] ? 2 : 0);
}

}  // namespace

TEST_CASE("y^2 = x^3 + x over F_3") {
  auto F3 = make_field(3, 1);
  const FqPoly Q = ztest::poly(*F3, {0, 1, 0, 1});
  // x=0: y=0; x=1: 2 non-square; x=2: 10 = 1, y = +-1; one point at infinity
  CHECK(naive_count(3, {0, 1, 0, 1}) == 4);
  for (Exec e : {Exec::Serial, Exec::Parallel}) {
    CHECK(count_points(F3, Q, 1, 1, e) == 4);
    CHECK(count_points(F3, Q, 2, 1, e) == 16);
  }
  CHECK(lpoly_from_counts({{4}, 3, 1}).coeffs == std::vector<std::int64_t>{3, 0, 1});
}

TEST_CASE("prime-field counts agree with direct enumeration") {
  std::mt19937_64 rng(4);
  for (std::uint64_t p : {3, 5, 7, 11}) {
    auto F = make_field(p, 1);
    for (int d = 3; d <= 6; ++d) {
      const FqElement lead = ztest::random_nonzero(*F, rng);
      const FqPoly Q = ztest::random_curve(*F, d, rng, lead);
      std::vector<std::int64_t> c;
      for (const auto& x : Q.coeffs()) c.push_back(x[0]);
      CHECK(count_points(F, Q, 1) == naive_count(p, c));
    }
  }
}

TEST_CASE("parallel and serial counting kernels agree") {
  std::mt19937_64 rng(12);
  for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {3, 2}, {5, 2}}) {
    auto F = ztest::field(p, n);
    for (int d : {3, 4, 5, 6}) {
      const FqPoly Q = ztest::random_curve(*F, d, rng, ztest::random_nonzero(*F, rng));
      for (int r = 1; r <= 3; ++r)
        CHECK(count_points(F, Q, r, 7, Exec::Parallel) == count_points(F, Q, r, 7, Exec::Serial));
    }
  }
}

TEST_CASE("counts do not depend on the extension modulus") {
  auto F = make_field(5, 1);
  const FqPoly Q = ztest::poly(*F, {1, 2, 0, 3, 0, 1});
  const auto ref = count_points(F, Q, 3, 1);
  for (std::uint64_t seed = 2; seed < 6; ++seed) CHECK(count_points(F, Q, 3, seed) == ref);
}

TEST_CASE("lpoly_from_counts") {
  CHECK(lpoly_from_counts({{8}, 7, 1}).coeffs == std::vector<std::int64_t>{7, 0, 1});

  // g = 2 from a product (X^2 + aX + q)(X^2 + bX + q):
  // S_1 = -(a+b), S_2 = a^2 + b^2 - 4q, and c_2 = ab + 2q = (S_1^2 - S_2)/2.
  const std::int64_t a = 1, b = -2, q = 5;
  const std::int64_t s1 = -(a + b), s2 = a * a + b * b - 4 * q;
  const CountVector cv{{static_cast<std::uint64_t>(q + 1 - s1), static_cast<std::uint64_t>(q * q + 1 - s2)}, 5, 2};
  const LPolynomial L = lpoly_from_counts(cv);
  CHECK(L.coeffs == std::vector<std::int64_t>{q * q, q * (a + b), a * b + 2 * q, a + b, 1});
  CHECK(L.coeffs[2] == (s1 * s1 - s2) / 2);

  try {
    lpoly_from_counts({{4, 11}, 3, 2});  // S_1 = 0, S_2 = -1 gives c_2 = 1/2
    FAIL("expected NonIntegralCoefficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralCoefficient);
  }
}

TEST_CASE("oracle L predicts the next count") {
  std::mt19937_64 rng(31);
  for (auto [p, n, d] : {std::tuple{3, 1, 5}, {5, 1, 5}, {3, 1, 6}, {3, 2, 5}, {7, 1, 3}}) {
    auto F = ztest::field(p, n);
    const FqPoly Q = ztest::random_curve(*F, d, rng);
    const CountVector cv = count_vector(F, Q);
    const LPolynomial L = lpoly_from_counts(cv);
    CHECK(L.satisfies_functional_equation());
    CHECK(L.satisfies_weil_bounds());
    CHECK(L.value_at_one() > 0);
    for (int r = 1; r <= cv.g; ++r) CHECK(L.point_count(r) == cv.counts[r - 1]);
    const int next = cv.g + 1;
    CHECK(L.point_count(next) == count_points(F, Q, next));
  }
}

TEST_CASE("Weil interval for counts") {
  std::mt19937_64 rng(2);
  auto F = make_field(7, 1);
  for (int t = 0; t < 10; ++t) {
    const FqPoly Q = ztest::random_curve(*F, 5, rng);
    const CountVector cv = count_vector(F, Q);
    std::int64_t qr = 1;
    for (int r = 1; r <= 2; ++r) {
      qr *= 7;
      const double dev = std::abs(static_cast<double>(cv.counts[r - 1]) - static_cast<double>(qr + 1));
      CHECK(dev <= 4.0 * std::sqrt(static_cast<double>(qr)) + 1e-9);
    }
  }
}

TEST_CASE("enumeration limit") {
  auto F = make_field(13, 1);
  const FqPoly Q = ztest::poly(*F, {1, 1, 0, 1});
  try {
    count_points(F, Q, 7);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}
