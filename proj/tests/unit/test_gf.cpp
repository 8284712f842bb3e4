#include <doctest.h>

#include "support.hpp"
#include "zetafrob/error.hpp"

using namespace zetafrob;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

// All monic polynomials of degree <= maxdeg over F_3 (prime field), nonconstant.
std::vector<FqPoly> monic_up_to(const FieldDesc& F, int maxdeg) {
  std::vector<FqPoly> out;
  for (int deg = 1; deg <= maxdeg; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= F.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FqElement> c;
      std::uint64_t v = idx;
      for (int i = 0; i < deg; ++i) {
        c.push_back(F.element_at(v % F.q()));
        v /= F.q();
      }
      c.push_back(F.one());
      out.emplace_back(F, std::move(c));
    }
  }
  return out;
}

bool divides(const FqPoly& a, const FqPoly& b) { return (b % a).is_zero(); }

}  // namespace

TEST_CASE("field construction") {
  auto F7 = make_field(7, 1);
  CHECK(F7->q() == 7);
  CHECK(F7->n() == 1);
  CHECK(code_of([] { make_field(2, 1); }) == ErrorCode::EvenCharacteristic);
  CHECK(code_of([] { make_field(9, 1); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_field(3, 2); }) == ErrorCode::MissingModulus);
  // t^2 + 2 = (t - 1)(t + 1) over F_3
  CHECK(code_of([] { make_field(3, 2, std::vector<std::uint64_t>{2, 0, 1}); }) == ErrorCode::ReducibleModulus);
  CHECK(code_of([] { make_field(3, 2, std::vector<std::uint64_t>{1, 0, 2}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("F_9 with modulus t^2+1 is accepted") {
  // no root of t^2 + 1 among 0, 1, 2
  for (int t = 0; t < 3; ++t) CHECK((t * t + 1) % 3 != 0);
  auto F9 = make_field(3, 2, std::vector<std::uint64_t>{1, 0, 1});
  CHECK(F9->q() == 9);
}

TEST_CASE("frobenius of t in F_9 is 2t") {
  auto F9 = make_field(3, 2, std::vector<std::uint64_t>{1, 0, 1});
  // t^3 = t * t^2 = t * (-1) = -t
  std::int64_t expect[2] = {0, 2};
  CHECK(F9->generator().frobenius() == F9->from_coords(expect));
}

TEST_CASE("basic field identities") {
  for (auto [p, n] : {std::pair{5, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    auto F = ztest::field(p, n);
    CHECK(F->one().inv() == F->one());
    for (std::uint64_t i = 1; i < F->q(); ++i) CHECK(F->element_at(i).pow(F->q() - 1) == F->one());
    CHECK(code_of([&] { F->zero().inv(); }) == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("field axioms on random pairs") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{7, 1}, {3, 2}, {5, 2}, {3, 3}, {3, 4}}) {
    auto F = ztest::field(p, n);
    for (int t = 0; t < 200; ++t) {
      const auto a = ztest::random_element(*F, rng);
      const auto b = ztest::random_nonzero(*F, rng);
      CHECK((a * b) * b.inv() == a);
      FqElement f = a;
      for (int k = 0; k < n; ++k) f = f.frobenius();
      CHECK(f == a);
      CHECK(F->index_of(a) < F->q());
      CHECK(F->element_at(F->index_of(a)) == a);
    }
  }
}

TEST_CASE("mixing fields is rejected") {
  auto F5 = make_field(5, 1);
  auto F7 = make_field(7, 1);
  CHECK(code_of([&] { (void)(F5->one() + F7->one()); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("polynomial gcd examples") {
  auto F5 = make_field(5, 1);
  using ztest::poly;
  CHECK(poly_gcd(poly(*F5, {-1, 0, 1}), poly(*F5, {-1, 1})) == poly(*F5, {-1, 1}));
  CHECK(poly_gcd(poly(*F5, {0, 0, 1}), poly(*F5, {0, 2})) == poly(*F5, {0, 1}));
  CHECK(code_of([&] { poly_gcd(FqPoly(*F5), FqPoly(*F5)); }) == ErrorCode::BothZero);

  auto F7 = make_field(7, 1);
  const FqPoly Q = poly(*F7, {0, 1, 0, 1});
  // Euclid: Q = (x/3) Q' + (2x/3); Q' = 3x^2 + 1 leaves remainder 1 mod x
  CHECK(poly_gcd(Q, Q.derivative()) == poly(*F7, {1}));
  CHECK(is_separable(Q));
}

TEST_CASE("xgcd produces a Bezout identity") {
  std::mt19937_64 rng(5);
  auto F = ztest::field(5, 2);
  for (int t = 0; t < 30; ++t) {
    const FqPoly a = ztest::random_curve(*F, 5, rng);
    const FqPoly b = ztest::random_curve(*F, 3, rng);
    const Xgcd x = poly_xgcd(a, b);
    CHECK(x.s * a + x.t * b == x.g);
    CHECK(x.g == poly_gcd(a, b));
  }
}

TEST_CASE("gcd is the greatest common divisor over F_3") {
  auto F3 = make_field(3, 1);
  const auto divisors = monic_up_to(*F3, 3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    // build pairs with a shared factor often enough
    const FqPoly c = divisors[rng() % divisors.size()];
    const FqPoly a = c * divisors[rng() % divisors.size()];
    const FqPoly b = c * divisors[rng() % divisors.size()];
    const FqPoly g = poly_gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    for (const auto& e : divisors)
      if (e.degree() <= 3 && divides(e, a) && divides(e, b)) CHECK(divides(e, g));
  }
}

TEST_CASE("separability") {
  auto F5 = make_field(5, 1);
  CHECK_FALSE(is_separable(ztest::poly(*F5, {0, 0, 0, 1})));
  CHECK(code_of([&] { is_separable(ztest::poly(*F5, {1, 0, 1})); }) == ErrorCode::DegreeTooSmall);

  // x^4 + 1 over F_3: Q' = 4x^3 = x^3 and Q = x * x^3 + 1, so gcd(Q, Q') = gcd(x^3, 1) = 1.
  auto F3 = make_field(3, 1);
  const FqPoly Q = ztest::poly(*F3, {1, 0, 0, 0, 1});
  CHECK(ztest::poly(*F3, {2, 1, 1}) * ztest::poly(*F3, {2, 2, 1}) == Q);
  CHECK(is_separable(Q));
}

TEST_CASE("separability agrees with the cubic discriminant over F_3") {
  auto F3 = make_field(3, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        // disc(x^3 + a x^2 + b x + c) = a^2b^2 - 4b^3 - 4a^3c - 27c^2 + 18abc
        const int disc = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
        const bool distinct = ((disc % 3) + 3) % 3 != 0;
        CHECK(is_separable(ztest::poly(*F3, {c, b, a, 1})) == distinct);
      }
}

TEST_CASE("irreducibility test") {
  auto F3 = make_field(3, 1);
  CHECK(is_irreducible(ztest::poly(*F3, {1, 0, 1})));
  CHECK_FALSE(is_irreducible(ztest::poly(*F3, {2, 0, 1})));
  CHECK(is_irreducible(ztest::poly(*F3, {1, 2, 0, 1})));
  CHECK_FALSE(is_irreducible(ztest::poly(*F3, {1, 0, 0, 0, 1})));
}

TEST_CASE("powmod agrees with repeated multiplication") {
  auto F = ztest::field(3, 2);
  std::mt19937_64 rng(9);
  const FqPoly m = ztest::random_curve(*F, 4, rng);
  const FqPoly b = ztest::random_curve(*F, 3, rng);
  FqPoly acc = ztest::poly(*F, {1});
  for (int e = 0; e < 12; ++e) {
    CHECK(powmod(b, static_cast<std::uint64_t>(e), m) == acc % m);
    acc = acc * b % m;
  }
}
