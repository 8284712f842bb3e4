#include <algorithm>

#include "zetafrob/error.hpp"
#include "zetafrob/kedlaya.hpp"

namespace zetafrob {

CurveData normalize_model(const FieldPtr& field, const FqPoly& Q_raw) {
  const int d = Q_raw.degree();
  if (d < 3) throw Error(ErrorCode::DegreeTooSmall, "deg Q must be at least 3, got " + std::to_string(d));
  if (!is_separable(Q_raw)) throw Error(ErrorCode::NotSeparable, "Q has a repeated root");

  CurveData c{field, Q_raw, d, (d - 1) / 2, false};
  const FqElement a = Q_raw.leading();
  if (a.is_one()) return c;

  if (d % 2 == 1) {
    // x -> x/a, y -> y/a^((d+1)/2): coefficient i becomes b_i a^(d-1-i)
    std::vector<FqElement> coeffs(Q_raw.coeffs());
    FqElement s = field->one();
    for (int i = d - 1; i >= 0; --i) {
      coeffs[i] *= s;
      s *= a;
    }
    coeffs[d] = field->one();
    c.Q = FqPoly(*field, std::move(coeffs));
    return c;
  }
  // even degree: y -> y sqrt(a) when possible, otherwise pass to the twist by a
  c.Q = Q_raw * a.inv();
  c.twisted = !a.is_square();
  return c;
}

LiftedCurve LiftedCurve::make(const CurveData& curve, ZqContextPtr ctx) {
  LiftedCurve lc;
  lc.curve = curve;
  const ZqContext& R = *ctx;
  lc.Q = ZqPoly::lift(R, curve.Q);
  lc.dQ = lc.Q.derivative();

  // Hensel-lift the F_q Bezout identity s Q' + t Q = 1.
  const Xgcd xg = poly_xgcd(curve.Q.derivative(), curve.Q);
  if (xg.g.degree() != 0) throw Error(ErrorCode::NotSeparable, "gcd(Q, Q') is not 1");
  ZqPoly V = ZqPoly::lift(R, xg.s % curve.Q);
  const ZqPoly one = ZqPoly::constant(ZqElement::one(R));
  const ZqPoly two = ZqPoly::constant(ZqElement::from_int(R, 2));
  for (int iter = 0;; ++iter) {
    const ZqPoly e = divmod_monic(lc.dQ * V, lc.Q).second;
    if ((e - one).valuation() >= R.nwork()) break;
    if (iter > 64) throw Error(ErrorCode::PrecisionExhausted, "Bezout lift did not converge");
    V = divmod_monic(V * (two - e), lc.Q).second;
  }
  auto [U, rem] = divmod_monic(one - V * lc.dQ, lc.Q);
  if (rem.valuation() < R.nwork()) throw Error(ErrorCode::PrecisionExhausted, "Bezout cofactor is not exact");
  lc.bezout_u = std::move(U);
  lc.bezout_v = std::move(V);
  lc.ctx = std::move(ctx);
  return lc;
}

BasisChoice basis_for(Basis which, int d) {
  BasisChoice b;
  b.which = which;
  b.k = which == Basis::B1 ? 0 : 1;
  if (d % 2 == 0) b.strip = which == Basis::B1 ? Strip::XMinusQ : Strip::XMinus1;
  return b;
}

BasisChoice select_basis(std::uint32_t p, int g, int d) {
  const bool b1 = d % 2 == 1 ? p >= static_cast<std::uint32_t>(2 * g)
                             : p > static_cast<std::uint32_t>(g);
  return basis_for(b1 ? Basis::B1 : Basis::B2, d);
}

std::string basis_name(Basis b) { return b == Basis::B1 ? "B1" : "B2"; }

std::string strip_name(Strip s) {
  switch (s) {
    case Strip::None: return "none";
    case Strip::XMinusQ: return "X-q";
    case Strip::XMinus1: return "X-1";
  }
  return "?";
}

int floor_log(std::uint64_t p, std::uint64_t x) {
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "floor_log of 0");
  int e = 0;
  unsigned __int128 pk = p;
  while (pk <= x) {
    pk *= p;
    ++e;
  }
  return e;
}

int tail_bound(std::uint32_t p, int nwork, int k) {
  return std::max(1, static_cast<int>(p) * (2 * nwork - 3 + 2 * k));
}

namespace {

int vp_factorial(std::uint32_t p, int g) {
  int v = 0;
  for (std::uint64_t pk = p; pk <= static_cast<std::uint64_t>(g); pk *= p) v += static_cast<int>(g / pk);
  return v;
}

// Worst B1 coordinate denominator exponent.
int basis_delta(std::uint32_t p, int g, int d, const BasisChoice& basis) {
  if (basis.which == Basis::B2) return 0;
  return d % 2 == 1 ? floor_log(p, static_cast<std::uint64_t>(std::max(1, 2 * g - 1)))
                    : floor_log(p, static_cast<std::uint64_t>(std::max(1, g)));
}

// Digits lost to the divisions in RednA (by m - 2 <= J) and RednB (by 2r + d).
int reduction_loss(std::uint32_t p, int d, int J, const BasisChoice& basis) {
  int loss = floor_log(p, static_cast<std::uint64_t>(J)) + 1;
  if (basis.which == Basis::B1) {
    const int top_degree = static_cast<int>(p) * (d - 1) + d;
    loss += floor_log(p, static_cast<std::uint64_t>(2 * top_degree));
  }
  return loss;
}

PrecisionPlan base_plan(std::uint32_t p, int n, int g, int d, const BasisChoice& basis) {
  PrecisionPlan plan;
  // N1: least K with p^(2K) >= (2 binom(2g,g))^2 p^(ng)
  const BigInt B = 2 * binomial(2 * g, g);
  BigInt rhs = B * B;
  for (int i = 0; i < n * g; ++i) rhs *= p;
  BigInt lhs = 1;
  int K = 0;
  while (lhs < rhs) {
    lhs *= BigInt(p) * p;
    ++K;
  }
  plan.N1 = K;
  plan.N = K + floor_log(p, static_cast<std::uint64_t>(2 * std::max(K, 1))) + 1;
  const int delta = basis_delta(p, g, d, basis);
  plan.basis_pad = basis.which == Basis::B1 ? delta + 1 : 0;
  plan.newton_pad = vp_factorial(p, g);
  plan.powering_pad = (n * g - 1) * delta;
  plan.matrix_prec = plan.N + plan.newton_pad + plan.powering_pad;
  return plan;
}

}  // namespace

PrecisionPlan plan_precision(std::uint32_t p, int n, int g, int d, const BasisChoice& basis) {
  PrecisionPlan plan = base_plan(p, n, g, d, basis);
  const int base = plan.matrix_prec + plan.basis_pad;
  int nwork = base;
  for (;;) {
    const int loss = reduction_loss(p, d, tail_bound(p, nwork, basis.k), basis);
    if (base + loss <= nwork) {
      plan.reduction_pad = nwork - base;
      break;
    }
    nwork = base + loss;
  }
  plan.nwork = nwork;
  plan.tail_bound = tail_bound(p, nwork, basis.k);
  plan.lift_prec = plan.N;
  return plan;
}

PrecisionPlan plan_with_nwork(std::uint32_t p, int n, int g, int d, const BasisChoice& basis,
                              int nwork) {
  PrecisionPlan plan = base_plan(p, n, g, d, basis);
  plan.nwork = nwork;
  plan.reduction_pad = nwork - plan.matrix_prec - plan.basis_pad;
  plan.tail_bound = tail_bound(p, nwork, basis.k);
  const int shortfall = reduction_loss(p, d, plan.tail_bound, basis) - plan.reduction_pad;
  plan.lift_prec = std::min(plan.N, plan.N - shortfall);
  return plan;
}

}  // namespace zetafrob
