#include <algorithm>

#include "zetafrob/error.hpp"
#include "zetafrob/kedlaya.hpp"

namespace zetafrob {

namespace {

using Series = std::vector<ZqPoly>;  // index m -> coefficient of y^(-2m)

// (sum a_m y^(-2m)) (sum b_m y^(-2m)) with coefficients reduced below degree d,
// keeping m <= mmax. Every b term has m >= 1 so nothing moves below m = 1.
Series series_mul(const Series& a, const Series& b, const LiftedCurve& lc, int mmax) {
  const ZqContext& R = *lc.ctx;
  Series acc(static_cast<std::size_t>(mmax) + 2, ZqPoly(R));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero() || i + j > static_cast<std::size_t>(mmax) + 1) continue;
      acc[i + j] += a[i] * b[j];
    }
  }
  Series out(static_cast<std::size_t>(mmax) + 1, ZqPoly(R));
  for (int m = 1; m <= mmax + 1; ++m) {
    if (acc[m].is_zero()) continue;
    // u1 Q y^(-2m) = u1 y^(-2(m-1))
    auto [u1, u0] = divmod_monic(acc[m], lc.Q);
    if (m <= mmax) out[m] += u0;
    out[m - 1] += u1;
  }
  return out;
}

}  // namespace

std::vector<ZqPoly> frobenius_y_series(const LiftedCurve& lc, int k, const PrecisionPlan& plan) {
  const ZqContext& R = *lc.ctx;
  const int p = static_cast<int>(R.p());
  const int mmax = std::max(0, (plan.tail_bound + (1 - 2 * k) * p) / 2);
  Series A(static_cast<std::size_t>(mmax) + 1, ZqPoly(R));
  A[0] = ZqPoly::constant(ZqElement::one(R));

  const ZqPoly delta = lc.Q.sigma(1).compose_power(p) - lc.Q.pow(static_cast<unsigned>(p));
  if (delta.is_zero() || mmax == 0) return A;
  if (delta.valuation() < 1)
    throw Error(ErrorCode::PrecisionExhausted, "Q^sigma(x^p) and Q^p differ mod p");

  // delta y^(-2p) in base Q: digit l sits at y^(-2(p-l))
  Series z(static_cast<std::size_t>(std::min(p, mmax + 1)) + 1, ZqPoly(R));
  ZqPoly rest = delta;
  for (int l = 0; !rest.is_zero(); ++l) {
    auto [quo, rem] = divmod_monic(rest, lc.Q);
    const int m = p - l;
    if (m < 1) throw Error(ErrorCode::PrecisionExhausted, "deg(Q^sigma(x^p) - Q^p) >= pd");
    if (m < static_cast<int>(z.size())) z[m] = std::move(rem);
    rest = std::move(quo);
  }

  Series zj = z;
  zj.resize(static_cast<std::size_t>(mmax) + 1, ZqPoly(R));
  ZqElement binom = ZqElement::one(R);
  for (int j = 1; j < R.nwork(); ++j) {
    if (j > 1) zj = series_mul(zj, z, lc, mmax);
    // binom(-(2k+1)/2, j)
    binom = binom.mul_int(-(2 * k + 1) - 2 * (j - 1)).div_int(2 * j);
    bool any = false;
    for (int m = 0; m <= mmax; ++m) {
      if (zj[m].is_zero()) continue;
      any = true;
      A[m] += zj[m] * binom;
    }
    if (!any) break;
  }
  return A;
}

DiffForm frobenius_image(const LiftedCurve& lc, int i, int k, const std::vector<ZqPoly>& series,
                         const PrecisionPlan& plan) {
  const int d = lc.d();
  if (i < 1 || i > d - 1) throw Error(ErrorCode::InvalidArgument, "differential index out of range");
  const int p = static_cast<int>(lc.ctx->p());
  const int J = plan.tail_bound;
  DiffForm form;
  for (std::size_t m = 0; m < series.size(); ++m) {
    if (series[m].is_zero()) continue;
    const int e = (2 * k + 1) * p + 2 * static_cast<int>(m);
    // p x^(pi-1) A_m dx / y^e, trading factors of Q for y^2 while e stays positive
    ZqPoly P = series[m].shift_x(p * i - 1).mul_int(p);
    const int last = (e - 1) / 2;
    for (int l = 0;; ++l) {
      const int ex = e - 2 * l;
      if (l == last) {
        form.add(ex, P);
        break;
      }
      if (P.degree() < d) {
        if (ex <= J) form.add(ex, P);
        break;
      }
      auto [quo, rem] = divmod_monic(P, lc.Q);
      if (ex <= J) form.add(ex, rem);
      P = std::move(quo);
    }
  }
  return form;
}

}  // namespace zetafrob
