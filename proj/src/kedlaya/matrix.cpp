#include <exception>

#include "zetafrob/error.hpp"
#include "zetafrob/kedlaya.hpp"

namespace zetafrob {

FrobMatrix::FrobMatrix(const ZqContext& ctx, int size)
    : ctx_(&ctx), size_(size), e_(static_cast<std::size_t>(size * size), ZqElement(ctx)) {}

int FrobMatrix::min_val() const {
  int v = kInfVal;
  for (const auto& x : e_) v = std::min(v, x.valuation());
  return v;
}

int FrobMatrix::column_min_val(int c) const {
  int v = kInfVal;
  for (int r = 0; r < size_; ++r) v = std::min(v, at(r, c).valuation());
  return v;
}

FrobMatrix FrobMatrix::sigma(int j) const {
  FrobMatrix out = *this;
  for (auto& x : out.e_) x = x.sigma(j);
  return out;
}

bool FrobMatrix::congruent(const FrobMatrix& o, int prec) const {
  if (size_ != o.size_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].congruent(o.e_[i], prec)) return false;
  return true;
}

namespace {

// Runs body(i) for 0 <= i < count, in an OpenMP loop under Exec::Parallel.
// Exceptions cannot cross the parallel region, so the first one is carried out.
template <class Body>
void for_each_index(int count, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(zetafrob_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

FrobMatrix matmul(const FrobMatrix& a, const FrobMatrix& b, Exec exec) {
  const int n = a.size();
  if (b.size() != n) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  FrobMatrix c(a.ctx(), n);
  for_each_index(n, exec, [&](int i) {
    for (int j = 0; j < n; ++j) {
      ZqElement acc(a.ctx());
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      c.at(i, j) = acc;
    }
  });
  return c;
}

FrobMatrix build_frobenius_matrix(const LiftedCurve& lc, const BasisChoice& basis,
                                  const PrecisionPlan& plan, Exec exec) {
  const std::vector<ZqPoly> series = frobenius_y_series(lc, basis.k, plan);
  const int size = lc.d() - 1;
  FrobMatrix M(*lc.ctx, size);
  for_each_index(size, exec, [&](int col) {
    const auto v = reduce_to_basis(frobenius_image(lc, col + 1, basis.k, series, plan), basis, lc);
    for (int r = 0; r < size; ++r) M.at(r, col) = v[r];
  });
  return M;
}

FrobMatrix twisted_power(const FrobMatrix& M, int n, Exec exec) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "twisted power needs n >= 1");
  int top = 0;
  while ((n >> (top + 1)) != 0) ++top;
  FrobMatrix T = M;
  int k = 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    T = matmul(T, T.sigma(k), exec);
    k *= 2;
    if ((n >> bit) & 1) {
      T = matmul(T, M.sigma(k), exec);
      k += 1;
    }
  }
  return T;
}

std::vector<ZqElement> charpoly_full(const FrobMatrix& A) {
  // Berkowitz: grow the leading principal submatrix one row/column at a time.
  const ZqContext& R = A.ctx();
  const int n = A.size();
  std::vector<ZqElement> poly{ZqElement::one(R), -A.at(0, 0)};  // descending
  for (int r = 1; r < n; ++r) {
    std::vector<ZqElement> t{ZqElement::one(R), -A.at(r, r)};
    // C = column r above the diagonal; successively A_sub^k C
    std::vector<ZqElement> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[i] = A.at(i, r);
    for (int k = 0; k < r; ++k) {
      ZqElement dot(R);
      for (int i = 0; i < r; ++i) dot += A.at(r, i) * v[i];
      t.push_back(-dot);
      if (k + 1 < r) {
        std::vector<ZqElement> w(static_cast<std::size_t>(r), ZqElement(R));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) w[i] += A.at(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<ZqElement> next(static_cast<std::size_t>(r) + 2, ZqElement(R));
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * poly[j];
    poly = std::move(next);
  }
  return {poly.rbegin(), poly.rend()};
}

std::vector<std::uint64_t> charpoly_mod(const FrobMatrix& Nmat, int g, const BasisChoice& basis,
                                        int prec) {
  const ZqContext& R = Nmat.ctx();
  const int n = R.n();
  std::vector<ZqElement> t(static_cast<std::size_t>(g) + 1, ZqElement(R));
  FrobMatrix P = Nmat;
  for (int r = 1; r <= g; ++r) {
    if (r > 1) P = matmul(P, Nmat);
    ZqElement tr(R);
    for (int i = 0; i < P.size(); ++i) tr += P.at(i, i);
    if (basis.strip == Strip::XMinusQ) tr -= ZqElement::from_int(R, R.p()).pow(static_cast<std::uint64_t>(n) * r);
    if (basis.strip == Strip::XMinus1) tr -= ZqElement::one(R);
    t[r] = tr;
  }

  // e_r = (1/r) sum_{i=1..r} (-1)^(i-1) e_(r-i) t_i
  std::vector<ZqElement> e(static_cast<std::size_t>(g) + 1, ZqElement(R));
  e[0] = ZqElement::one(R);
  for (int r = 1; r <= g; ++r) {
    ZqElement acc(R);
    for (int i = 1; i <= r; ++i) acc += (i % 2 ? e[r - i] : -e[r - i]) * t[i];
    e[r] = acc.div_int(r);
    if (e[r].valuation() < 0)
      throw Error(ErrorCode::NewtonDivisionFailure,
                  "elementary symmetric function e_" + std::to_string(r) + " is not integral");
  }
  // re-expand the power sums as a check on the divisions above
  for (int r = 1; r <= g; ++r) {
    ZqElement s = e[r].mul_int(r % 2 ? r : -r);
    for (int i = 1; i < r; ++i) s += (i % 2 ? e[i] : -e[i]) * t[r - i];
    if (!s.congruent(t[r], prec))
      throw Error(ErrorCode::NewtonDivisionFailure,
                  "power sum " + std::to_string(r) + " does not round-trip");
  }

  std::vector<std::uint64_t> out;
  for (int r = 1; r <= g; ++r) {
    const ZqElement c = r % 2 ? -e[r] : e[r];
    const auto coords = c.residue(prec);
    for (std::size_t i = 1; i < coords.size(); ++i)
      if (coords[i] != 0)
        throw Error(ErrorCode::PrecisionExhausted,
                    "coefficient c_" + std::to_string(2 * g - r) + " is not in Z_p mod p^" + std::to_string(prec));
    out.push_back(coords[0]);
  }
  return out;
}

LPolynomial lift_lpoly(const std::vector<std::uint64_t>& residues, std::uint32_t p, int prec,
                       int g, std::uint64_t q) {
  BigInt M = 1;
  for (int i = 0; i < prec; ++i) M *= p;
  BigInt qi = 1;
  for (int i = 1; i <= g; ++i) {
    qi *= q;
    const BigInt b = binomial(2 * g, i);
    if (4 * b * b * qi >= M * M)
      throw Error(ErrorCode::PrecisionExhausted,
                  "p^" + std::to_string(prec) + " cannot separate coefficient c_" + std::to_string(2 * g - i));
  }
  std::vector<BigInt> top;
  for (auto r : residues) {
    BigInt v = r;
    if (2 * v > M) v -= M;
    top.push_back(v);
  }
  LPolynomial L = lpoly_from_top(top, q, g);
  if (!L.satisfies_weil_bounds())
    throw Error(ErrorCode::WeilBoundViolation, "recovered " + L.to_string() + " violates the Weil bounds");
  if (L.value_at_one() <= 0)
    throw Error(ErrorCode::WeilBoundViolation, "recovered " + L.to_string() + " has L(1) <= 0");
  return L;
}

}  // namespace zetafrob
