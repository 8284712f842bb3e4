#include <chrono>

#include "zetafrob/error.hpp"
#include "zetafrob/kedlaya.hpp"

namespace zetafrob {

ZetaResult zeta_pipeline(const FieldPtr& field, const FqPoly& Q_raw, const PipelineOverrides& overrides) {
  using Clock = std::chrono::steady_clock;
  ZetaResult res;
  auto mark = Clock::now();
  auto lap = [&](const char* stage) {
    const auto now = Clock::now();
    res.timings.emplace_back(stage, std::chrono::duration<double>(now - mark).count());
    mark = now;
  };

  const CurveData curve = normalize_model(field, Q_raw);
  const std::uint32_t p = field->p();
  const int n = field->n();
  res.d = curve.d;
  res.g = curve.g;
  res.twisted = curve.twisted;
  res.basis = overrides.basis ? basis_for(*overrides.basis, curve.d) : select_basis(p, curve.g, curve.d);
  res.plan = overrides.nwork ? plan_with_nwork(p, n, curve.g, curve.d, res.basis, *overrides.nwork)
                             : plan_precision(p, n, curve.g, curve.d, res.basis);
  if (res.plan.lift_prec < 1)
    throw Error(ErrorCode::PrecisionExhausted,
                "working precision " + std::to_string(res.plan.nwork) + " certifies no digits of L");
  lap("setup");

  const ZqContextPtr ctx = ZqContext::make(field, res.plan.nwork);
  const LiftedCurve lc = LiftedCurve::make(curve, ctx);
  lap("lift");

  const FrobMatrix M = build_frobenius_matrix(lc, res.basis, res.plan, overrides.exec);
  res.matrix_min_val = M.min_val();
  if (res.matrix_min_val < 0)
    res.warnings.push_back("Frobenius matrix is not p-integral: minimum entry valuation " +
                           std::to_string(res.matrix_min_val));
  lap("frobenius_matrix");

  const FrobMatrix Nmat = twisted_power(M, n, overrides.exec);
  lap("twisted_power");

  const auto residues = charpoly_mod(Nmat, curve.g, res.basis, res.plan.lift_prec);
  lap("charpoly");

  res.L = lift_lpoly(residues, p, res.plan.lift_prec, curve.g, field->q());
  if (curve.twisted) res.L = res.L.twisted();
  lap("lift_lpoly");
  return res;
}

}  // namespace zetafrob
