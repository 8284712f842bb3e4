#pragma once

// Frobenius action on the odd part of the de Rham cohomology of y^2 = Q(x),
// and recovery of the zeta numerator from it.

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetafrob/exec.hpp"
#include "zetafrob/gf.hpp"
#include "zetafrob/lpoly.hpp"
#include "zetafrob/zq.hpp"

namespace zetafrob {

struct CurveData {
  FieldPtr field;
  FqPoly Q;  // monic, separable
  int d = 0;
  int g = 0;
  /// Even-degree model replaced by its quadratic twist; L needs X -> -X.
  bool twisted = false;
};

/// y^2 = Q_raw -> monic model. Throws DegreeTooSmall / NotSeparable.
CurveData normalize_model(const FieldPtr& field, const FqPoly& Q_raw);

/// Q, Q' and the Bezout data over Z_q mod p^nwork.
struct LiftedCurve {
  ZqContextPtr ctx;
  CurveData curve;
  ZqPoly Q;
  ZqPoly dQ;
  /// U*Q + V*Q' == 1
  ZqPoly bezout_u;
  ZqPoly bezout_v;

  static LiftedCurve make(const CurveData& curve, ZqContextPtr ctx);
  int d() const { return curve.d; }
};

enum class Basis { B1, B2 };
enum class Strip { None, XMinusQ, XMinus1 };

struct BasisChoice {
  Basis which = Basis::B1;
  int k = 0;  // differentials x^i dx / y^(2k+1)
  Strip strip = Strip::None;
};

BasisChoice select_basis(std::uint32_t p, int g, int d);
BasisChoice basis_for(Basis which, int d);
std::string basis_name(Basis b);
std::string strip_name(Strip s);

struct PrecisionPlan {
  int N1 = 0;
  int N = 0;
  int nwork = 0;
  int tail_bound = 0;  // J
  /// Digits the matrix M is expected to be correct to.
  int matrix_prec = 0;
  int basis_pad = 0;
  int newton_pad = 0;
  int powering_pad = 0;
  int reduction_pad = 0;
  /// Digits of L(X) the run certifies; below N when nwork was forced too low.
  int lift_prec = 0;
};

PrecisionPlan plan_precision(std::uint32_t p, int n, int g, int d, const BasisChoice& basis);
/// Plan with the working precision forced; N1 and N keep their usual values.
PrecisionPlan plan_with_nwork(std::uint32_t p, int n, int g, int d, const BasisChoice& basis,
                              int nwork);
/// J = p(2 nwork - 3 + 2k): exponents beyond J only carry terms divisible by p^nwork.
int tail_bound(std::uint32_t p, int nwork, int k);

/// Largest e with p^e <= x (x >= 1).
int floor_log(std::uint64_t p, std::uint64_t x);

/// Sum over odd m >= 1 of terms[m](x) dx / y^m.
struct DiffForm {
  std::map<int, ZqPoly> terms;

  void add(int m, const ZqPoly& s);
  int min_exponent() const;
  int max_exponent() const;
};

/// A_0..A_M with (1 + (Q^sigma(x^p) - Q^p) y^(-2p))^(-(2k+1)/2) = sum A_m y^(-2m),
/// every A_m reduced below degree d.
std::vector<ZqPoly> frobenius_y_series(const LiftedCurve& lc, int k, const PrecisionPlan& plan);

/// Standard expansion of F_p*(x^(i-1) dx / y^(2k+1)), 1 <= i <= d-1.
DiffForm frobenius_image(const LiftedCurve& lc, int i, int k, const std::vector<ZqPoly>& series,
                         const PrecisionPlan& plan);

/// S dx/y^m == T dx/y^(m-2) for odd m >= 3; deg T < d when deg S < d.
ZqPoly redn_a_step(const ZqPoly& S, int m, const LiftedCurve& lc);

/// T dx/y == sum a_i x^i dx/y, i < d-1.
std::vector<ZqElement> redn_b_reduce(const ZqPoly& T, const LiftedCurve& lc);

std::vector<ZqElement> reduce_to_basis(const DiffForm& form, const BasisChoice& basis,
                                       const LiftedCurve& lc);

/// Even d: monic S of degree g+1 with deg(S Q' - 2 S' Q) <= 2g.
ZqPoly kernel_generator(const LiftedCurve& lc);

/// Square matrix over the truncated ring; like ZqElement it does not own its context.
class FrobMatrix {
 public:
  FrobMatrix() = default;
  FrobMatrix(const ZqContext& ctx, int size);

  const ZqContext& ctx() const { return *ctx_; }
  int size() const { return size_; }
  ZqElement& at(int r, int c) { return e_[static_cast<std::size_t>(r * size_ + c)]; }
  const ZqElement& at(int r, int c) const { return e_[static_cast<std::size_t>(r * size_ + c)]; }
  int min_val() const;
  int column_min_val(int c) const;
  FrobMatrix sigma(int j) const;
  bool congruent(const FrobMatrix& o, int prec) const;

 private:
  const ZqContext* ctx_ = nullptr;
  int size_ = 0;
  std::vector<ZqElement> e_;
};

/// Product with the Parallel policy splitting rows across OpenMP threads.
FrobMatrix matmul(const FrobMatrix& a, const FrobMatrix& b, Exec exec = Exec::Parallel);

FrobMatrix build_frobenius_matrix(const LiftedCurve& lc, const BasisChoice& basis,
                                  const PrecisionPlan& plan, Exec exec = Exec::Parallel);

/// M sigma(M) ... sigma^(n-1)(M)
FrobMatrix twisted_power(const FrobMatrix& M, int n, Exec exec = Exec::Parallel);

/// Full characteristic polynomial det(X - A), ascending, division free.
std::vector<ZqElement> charpoly_full(const FrobMatrix& A);

/// Top coefficients c_(2g-1)..c_g of L mod p^prec after removing the strip factor.
std::vector<std::uint64_t> charpoly_mod(const FrobMatrix& Nmat, int g, const BasisChoice& basis,
                                        int prec);

LPolynomial lift_lpoly(const std::vector<std::uint64_t>& residues, std::uint32_t p, int prec,
                       int g, std::uint64_t q);

struct PipelineOverrides {
  std::optional<Basis> basis;
  std::optional<int> nwork;
  Exec exec = Exec::Parallel;
};

struct ZetaResult {
  LPolynomial L;
  BasisChoice basis;
  PrecisionPlan plan;
  int d = 0;
  int g = 0;
  int matrix_min_val = 0;
  bool twisted = false;
  std::vector<std::pair<std::string, double>> timings;  // seconds
  std::vector<std::string> warnings;
};

ZetaResult zeta_pipeline(const FieldPtr& field, const FqPoly& Q_raw,
                         const PipelineOverrides& overrides = {});

}  // namespace zetafrob
