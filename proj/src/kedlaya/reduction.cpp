#include "zetafrob/error.hpp"
#include "zetafrob/kedlaya.hpp"

namespace zetafrob {

void DiffForm::add(int m, const ZqPoly& s) {
  if (m < 1 || m % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "differential exponent must be odd and >= 1, got " + std::to_string(m));
  if (s.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end())
    terms.emplace(m, s);
  else
    it->second += s;
}

int DiffForm::min_exponent() const { return terms.empty() ? 0 : terms.begin()->first; }
int DiffForm::max_exponent() const { return terms.empty() ? 0 : terms.rbegin()->first; }

ZqPoly redn_a_step(const ZqPoly& S, int m, const LiftedCurve& lc) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidArgument, "RednA needs odd m >= 3");
  if (S.is_zero()) return S;
  // S = A Q + B Q'
  const ZqPoly B = divmod_monic(S * lc.bezout_v, lc.Q).second;
  const ZqPoly A = divmod_monic(S - B * lc.dQ, lc.Q).first;
  return A + B.derivative().mul_int(2).div_int(m - 2);
}

std::vector<ZqElement> redn_b_reduce(const ZqPoly& T, const LiftedCurve& lc) {
  const ZqContext& R = *lc.ctx;
  const int d = lc.d();
  std::vector<ZqElement> c = T.coeffs();
  if (static_cast<int>(c.size()) < d - 1) c.resize(static_cast<std::size_t>(d - 1), ZqElement(R));
  const auto& Qc = lc.Q.coeffs();
  const auto& dQc = lc.dQ.coeffs();
  for (int top = static_cast<int>(c.size()) - 1; top >= d - 1; --top) {
    const ZqElement lead = c[top];
    if (lead.is_zero()) continue;
    // d(2 x^r y) = (2r x^(r-1) Q + x^r Q') dx/y, leading term (2r+d) x^(r+d-1)
    const int r = top - d + 1;
    const ZqElement f = lead.div_int(2 * r + d);
    if (r >= 1) {
      const ZqElement f2r = f.mul_int(2 * r);
      for (int j = 0; j <= d; ++j) c[r - 1 + j] -= f2r * Qc[j];
    }
    for (int j = 0; j < d; ++j) c[r + j] -= f * dQc[j];
    c[top] = ZqElement(R);
  }
  c.resize(static_cast<std::size_t>(d - 1), ZqElement(R));
  return c;
}

std::vector<ZqElement> reduce_to_basis(const DiffForm& form, const BasisChoice& basis,
                                       const LiftedCurve& lc) {
  const int d = lc.d();
  const int target = 2 * basis.k + 1;
  std::map<int, ZqPoly> terms = form.terms;
  if (!terms.empty() && terms.begin()->first < target)
    throw Error(ErrorCode::NonBasisResidual,
                "form has a dx/y^" + std::to_string(terms.begin()->first) + " term below the basis exponent");

  while (!terms.empty() && terms.rbegin()->first > target) {
    auto it = std::prev(terms.end());
    const int m = it->first;
    ZqPoly S = std::move(it->second);
    terms.erase(it);
    if (S.is_zero()) continue;
    ZqPoly carry(*lc.ctx);
    if (S.degree() >= d) {
      // S/y^m = r/y^m + quo/y^(m-2)
      auto [quo, rem] = divmod_monic(S, lc.Q);
      carry = std::move(quo);
      S = std::move(rem);
    }
    carry += redn_a_step(S, m, lc);
    if (carry.is_zero()) continue;
    auto [slot, fresh] = terms.emplace(m - 2, carry);
    if (!fresh) slot->second += carry;
  }

  const auto it = terms.find(target);
  const ZqPoly base = it == terms.end() ? ZqPoly(*lc.ctx) : it->second;
  if (basis.which == Basis::B1) return redn_b_reduce(base, lc);
  if (base.degree() >= d - 1)
    throw Error(ErrorCode::NonBasisResidual,
                "residual at dx/y^3 has degree " + std::to_string(base.degree()));
  std::vector<ZqElement> out = base.coeffs();
  out.resize(static_cast<std::size_t>(d - 1), ZqElement(*lc.ctx));
  return out;
}

ZqPoly kernel_generator(const LiftedCurve& lc) {
  const int d = lc.d();
  if (d % 2 == 1) throw Error(ErrorCode::OddDegree, "kernel generator needs even degree");
  const int g = lc.curve.g;
  const ZqContext& R = *lc.ctx;
  ZqPoly S = ZqPoly::monomial(ZqElement::one(R), g + 1);
  for (int i = g; i >= 0; --i) {
    const ZqPoly V = S * lc.dQ - (S.derivative() * lc.Q).mul_int(2);
    const ZqElement c = V.coeff(d - 1 + i);
    if (!c.is_zero()) S.set_coeff(i, -c.div_int(2 * g + 2 - 2 * i));
  }
  return S;
}

}  // namespace zetafrob
