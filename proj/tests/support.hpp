#pragma once

// Shared fixtures: seeded random curves over small fields.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zetafrob/error.hpp"
#include "zetafrob/gf.hpp"
#include "zetafrob/kedlaya.hpp"

namespace ztest {

using namespace zetafrob;

// Irreducible quadratics/cubics t^n + ... over F_p, ascending.
inline FieldPtr field(std::uint64_t p, int n) {
  if (n == 1) return make_field(p, 1);
  if (n == 2) {
    // t^2 - c with c a non-residue
    for (std::uint64_t c = 2; c < p; ++c) {
      bool residue = false;
      for (std::uint64_t x = 1; x < p; ++x) residue |= x * x % p == c;
      if (!residue) return make_field(p, 2, std::vector<std::uint64_t>{p - c, 0, 1});
    }
  }
  if (n == 3 && p == 3) return make_field(3, 3, std::vector<std::uint64_t>{1, 2, 0, 1});
  if (n == 4 && p == 3) return make_field(3, 4, std::vector<std::uint64_t>{2, 0, 0, 1, 1});
  throw Error(ErrorCode::Unsupported, "no test modulus");
}

/// Largest nwork with p^nwork < 2^62.
inline int max_nwork(std::uint64_t p) {
  int k = 0;
  for (unsigned __int128 v = p; v < (static_cast<unsigned __int128>(1) << 62); v *= p) ++k;
  return k;
}

inline FqElement random_element(const FieldDesc& F, std::mt19937_64& rng) {
  return F.element_at(rng() % F.q());
}

inline FqElement random_nonzero(const FieldDesc& F, std::mt19937_64& rng) {
  return F.element_at(1 + rng() % (F.q() - 1));
}

/// Random separable polynomial of degree d with the given leading coefficient.
inline FqPoly random_curve(const FieldDesc& F, int d, std::mt19937_64& rng,
                           std::optional<FqElement> lead = std::nullopt) {
  for (;;) {
    std::vector<FqElement> c;
    for (int i = 0; i < d; ++i) c.push_back(random_element(F, rng));
    c.push_back(lead ? *lead : F.one());
    FqPoly Q(F, std::move(c));
    if (is_separable(Q)) return Q;
  }
}

inline FqPoly poly(const FieldDesc& F, std::initializer_list<std::int64_t> ascending) {
  std::vector<FqElement> c;
  for (auto v : ascending) c.push_back(F.from_int(v));
  return FqPoly(F, std::move(c));
}

inline ZqElement random_zq(const ZqContext& R, std::mt19937_64& rng) {
  Mantissa m{};
  for (int i = 0; i < R.n(); ++i) m[i] = rng() % R.modulus();
  return ZqElement::from_parts(R, 0, m);
}

inline ZqElement random_zq_unit(const ZqContext& R, std::mt19937_64& rng) {
  for (;;) {
    ZqElement a = random_zq(R, rng);
    if (a.valuation() == 0) return a;
  }
}

}  // namespace ztest
