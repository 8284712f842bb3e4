#include "zetafrob/zq.hpp"

#include <algorithm>
#include <sstream>

#include "zetafrob/error.hpp"

namespace zetafrob {

namespace {

bool all_zero(const Mantissa& m, int n) {
  for (int i = 0; i < n; ++i)
    if (m[i] != 0) return false;
  return true;
}

// Absolute coordinates of p^val * m mod p^nwork; val must be >= 0.
Mantissa absolute_coords(const ZqElement& a) {
  const ZqContext& ctx = a.ctx();
  Mantissa out{};
  if (a.is_zero() || a.valuation() >= ctx.nwork()) return out;
  if (a.valuation() < 0)
    throw Error(ErrorCode::PrecisionExhausted, "expected an integral element");
  const std::uint64_t s = ctx.ppow(a.valuation());
  for (int i = 0; i < ctx.n(); ++i) out[i] = mulmod(a.mantissa()[i], s, ctx.modulus());
  return out;
}

}  // namespace

IntSplit split_p(std::int64_t c, std::uint32_t p) {
  if (c == 0) throw Error(ErrorCode::DivisionByZero, "valuation of zero");
  int v = 0;
  const auto pp = static_cast<std::int64_t>(p);
  while (c % pp == 0) {
    c /= pp;
    ++v;
  }
  return {v, c};
}

// ---------------------------------------------------------------------------

ZqContext::ZqContext(FieldPtr field, int nwork) : field_(std::move(field)), nwork_(nwork) {}

ZqContextPtr ZqContext::make(FieldPtr field, int nwork) {
  if (!field) throw Error(ErrorCode::InvalidArgument, "null field");
  if (nwork < 1) throw Error(ErrorCode::InvalidArgument, "working precision must be >= 1");
  auto ctx = std::make_shared<ZqContext>(field, nwork);
  const std::uint64_t p = field->p();
  ctx->ppow_.push_back(1);
  for (int k = 1; k <= nwork; ++k) {
    if (ctx->ppow_.back() > ((std::uint64_t{1} << 62) - 1) / p)
      throw Error(ErrorCode::Unsupported,
                  "p^" + std::to_string(nwork) + " exceeds the 62-bit residue range");
    ctx->ppow_.push_back(ctx->ppow_.back() * p);
  }
  ctx->pw_ = ctx->ppow_.back();
  for (auto c : field->modulus()) ctx->lifted_modulus_.push_back(c);
  ctx->init_sigma();
  return ctx;
}

const ZqElement& ZqContext::sigma_image() const { return *sigma_image_; }

void ZqContext::init_sigma() {
  const int n = field_->n();
  if (n == 1) {
    sigma_image_ = std::make_unique<ZqElement>(ZqElement::theta(*this));
    Mantissa one{};
    one[0] = 1;
    sigma_table_.assign(1, std::vector<Mantissa>{one});
    return;
  }

  // Newton iteration on the lifted modulus, starting from theta^p.
  auto eval = [&](const ZqElement& y, bool derivative) {
    ZqElement acc(*this);
    for (int i = n; i >= (derivative ? 1 : 0); --i) {
      const std::int64_t c = static_cast<std::int64_t>(lifted_modulus_[i]) * (derivative ? i : 1);
      acc = acc * y + ZqElement::from_int(*this, c);
    }
    return acc;
  };
  ZqElement y = ZqElement::theta(*this).pow(p());
  int steps = 0;
  for (ZqElement fy = eval(y, false); !fy.is_zero(); fy = eval(y, false)) {
    if (++steps > 64) throw Error(ErrorCode::PrecisionExhausted, "sigma Newton iteration stalled");
    y = y - fy * eval(y, true).inv();
  }
  newton_steps_ = steps;
  sigma_image_ = std::make_unique<ZqElement>(y);

  // sigma^j(theta^i) for 0 <= j < n, 0 <= i < n
  sigma_table_.assign(static_cast<std::size_t>(n), std::vector<Mantissa>(static_cast<std::size_t>(n)));
  ZqElement sj = ZqElement::theta(*this);
  for (int j = 0; j < n; ++j) {
    ZqElement power = ZqElement::one(*this);
    for (int i = 0; i < n; ++i) {
      sigma_table_[j][i] = absolute_coords(power);
      power *= sj;
    }
    sj = j == 0 ? y : sj.sigma(1);
  }
}

void ZqContext::mul_mantissa(const Mantissa& a, const Mantissa& b, Mantissa& out) const {
  const int n = field_->n();
  const std::uint64_t m = pw_;
  if (n == 1) {
    out[0] = mulmod(a[0], b[0], m);
    return;
  }
  std::uint64_t tmp[2 * kMaxExtDegree] = {};
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) tmp[i + j] = addmod(tmp[i + j], mulmod(a[i], b[j], m), m);
  }
  for (int k = 2 * n - 2; k >= n; --k) {
    const std::uint64_t c = tmp[k];
    if (c == 0) continue;
    for (int j = 0; j < n; ++j)
      tmp[k - n + j] = submod(tmp[k - n + j], mulmod(c, lifted_modulus_[j], m), m);
  }
  for (int i = 0; i < n; ++i) out[i] = tmp[i];
  for (int i = n; i < kMaxExtDegree; ++i) out[i] = 0;
}

void ZqContext::sigma_mantissa(const Mantissa& a, int j, Mantissa& out) const {
  const int n = field_->n();
  j %= n;
  if (j == 0) {
    out = a;
    return;
  }
  const auto& table = sigma_table_[static_cast<std::size_t>(j)];
  Mantissa r{};
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int k = 0; k < n; ++k) r[k] = addmod(r[k], mulmod(a[i], table[i][k], pw_), pw_);
  }
  out = r;
}

Mantissa ZqContext::inv_mantissa(const Mantissa& a) const {
  const int n = field_->n();
  FqElement abar(*field_);
  for (int i = 0; i < n; ++i) abar.coords()[i] = static_cast<std::uint32_t>(a[i] % p());
  if (abar.is_zero()) throw Error(ErrorCode::DivisionByZero, "mantissa is not a unit");
  const FqElement ibar = abar.inv();
  Mantissa y{};
  for (int i = 0; i < n; ++i) y[i] = ibar[i];
  // y <- y (2 - a y), doubling the number of correct digits
  for (int prec = 1; prec < nwork_; prec *= 2) {
    Mantissa ay{}, t{};
    mul_mantissa(a, y, ay);
    for (int i = 0; i < n; ++i) t[i] = submod(i == 0 ? 2 % pw_ : 0, ay[i], pw_);
    mul_mantissa(y, t, y);
  }
  return y;
}

std::uint64_t ZqContext::inv_int(std::int64_t u) const {
  const auto m = static_cast<std::int64_t>(pw_);
  std::int64_t a = u % m;
  if (a < 0) a += m;
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t qt = old_r / r;
    std::int64_t tmp = old_r - qt * r;
    old_r = r, r = tmp;
    tmp = old_s - qt * s;
    old_s = s, s = tmp;
  }
  if (old_r != 1) throw Error(ErrorCode::DivisionByZero, "integer is not invertible mod p^nwork");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return static_cast<std::uint64_t>(old_s);
}

// ---------------------------------------------------------------------------

ZqElement ZqElement::from_int(const ZqContext& ctx, std::int64_t v) {
  ZqElement r(ctx);
  if (v == 0) return r;
  const auto m = static_cast<std::int64_t>(ctx.modulus());
  std::int64_t red = v % m;
  if (red < 0) red += m;
  r.val_ = 0;
  r.m_[0] = static_cast<std::uint64_t>(red);
  r.normalize();
  return r;
}

ZqElement ZqElement::lift(const ZqContext& ctx, const FqElement& a) {
  ZqElement r(ctx);
  r.val_ = 0;
  for (int i = 0; i < ctx.n(); ++i) r.m_[i] = a[i];
  r.normalize();
  return r;
}

ZqElement ZqElement::from_parts(const ZqContext& ctx, int val, const Mantissa& mant) {
  ZqElement r(ctx);
  r.val_ = val;
  for (int i = 0; i < ctx.n(); ++i) r.m_[i] = mant[i] % ctx.modulus();
  r.normalize();
  return r;
}

ZqElement ZqElement::theta(const ZqContext& ctx) {
  if (ctx.n() == 1) {
    // F_p[t]/(t - c): theta is the integer c
    const auto c0 = static_cast<std::int64_t>(ctx.lifted_modulus()[0]);
    return from_int(ctx, -c0);
  }
  Mantissa m{};
  m[1] = 1;
  return from_parts(ctx, 0, m);
}

void ZqElement::normalize() {
  const int n = ctx_->n();
  if (all_zero(m_, n)) {
    val_ = kInfVal;
    m_ = {};
    return;
  }
  const std::uint64_t p = ctx_->p();
  int s = 0;
  for (;;) {
    bool divisible = true;
    for (int i = 0; i < n && divisible; ++i) divisible = m_[i] % p == 0;
    if (!divisible) break;
    for (int i = 0; i < n; ++i) m_[i] /= p;
    ++s;
  }
  val_ += s;
}

ZqElement ZqElement::operator+(const ZqElement& b) const {
  if (is_zero()) return b.ctx_ ? b : *this;
  if (b.is_zero()) return *this;
  const ZqElement& lo = val_ <= b.val_ ? *this : b;
  const ZqElement& hi = val_ <= b.val_ ? b : *this;
  const int gap = hi.val_ - lo.val_;
  const ZqContext& ctx = *ctx_;
  if (gap >= ctx.nwork()) return lo;
  ZqElement r(ctx);
  r.val_ = lo.val_;
  const std::uint64_t m = ctx.modulus();
  const std::uint64_t s = ctx.ppow(gap);
  for (int i = 0; i < ctx.n(); ++i) r.m_[i] = addmod(lo.m_[i], mulmod(hi.m_[i], s, m), m);
  r.normalize();
  return r;
}

ZqElement ZqElement::operator-() const {
  if (is_zero()) return *this;
  ZqElement r = *this;
  const std::uint64_t m = ctx_->modulus();
  for (int i = 0; i < ctx_->n(); ++i) r.m_[i] = m_[i] == 0 ? 0 : m - m_[i];
  return r;
}

ZqElement ZqElement::operator-(const ZqElement& b) const { return *this + (-b); }

ZqElement ZqElement::operator*(const ZqElement& b) const {
  if (is_zero() || b.is_zero()) return ZqElement(ctx_ ? *ctx_ : *b.ctx_);
  ZqElement r(*ctx_);
  r.val_ = val_ + b.val_;
  ctx_->mul_mantissa(m_, b.m_, r.m_);
  r.normalize();
  return r;
}

ZqElement ZqElement::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Z_q");
  ZqElement r(*ctx_);
  r.val_ = -val_;
  r.m_ = ctx_->inv_mantissa(m_);
  return r;
}

ZqElement ZqElement::pow(std::uint64_t e) const {
  ZqElement result = one(*ctx_);
  ZqElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ZqElement ZqElement::mul_int(std::int64_t c) const {
  if (c == 0 || is_zero()) return ZqElement(*ctx_);
  const IntSplit s = split_p(c, ctx_->p());
  const auto m = static_cast<std::int64_t>(ctx_->modulus());
  std::int64_t u = s.unit % m;
  if (u < 0) u += m;
  ZqElement r = *this;
  r.val_ += s.val;
  for (int i = 0; i < ctx_->n(); ++i) r.m_[i] = mulmod(m_[i], static_cast<std::uint64_t>(u), ctx_->modulus());
  return r;
}

ZqElement ZqElement::div_int(std::int64_t c) const {
  if (c == 0) throw Error(ErrorCode::DivisionByZero, "division of Z_q element by 0");
  if (is_zero()) return *this;
  const IntSplit s = split_p(c, ctx_->p());
  const std::uint64_t ui = ctx_->inv_int(s.unit);
  ZqElement r = *this;
  r.val_ -= s.val;
  if (r.val_ + ctx_->nwork() < 1)
    throw Error(ErrorCode::PrecisionExhausted,
                "division by " + std::to_string(c) + " leaves no significant digits");
  for (int i = 0; i < ctx_->n(); ++i) r.m_[i] = mulmod(m_[i], ui, ctx_->modulus());
  return r;
}

ZqElement ZqElement::shift(int k) const {
  if (is_zero()) return *this;
  ZqElement r = *this;
  r.val_ += k;
  return r;
}

ZqElement ZqElement::sigma(int j) const {
  if (is_zero()) return *this;
  ZqElement r(*ctx_);
  r.val_ = val_;
  ctx_->sigma_mantissa(m_, j, r.m_);
  r.normalize();
  return r;
}

FqElement ZqElement::reduce() const {
  const FieldDesc& F = ctx_->field();
  FqElement r(F);
  if (is_zero() || val_ > 0) return r;
  if (val_ < 0) throw Error(ErrorCode::PrecisionExhausted, "reduction of a non-integral element");
  for (int i = 0; i < ctx_->n(); ++i) r.coords()[i] = static_cast<std::uint32_t>(m_[i] % ctx_->p());
  return r;
}

std::vector<std::uint64_t> ZqElement::residue(int prec) const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(ctx_->n()), 0);
  if (is_zero() || val_ >= prec) return out;
  if (val_ < 0) throw Error(ErrorCode::PrecisionExhausted, "residue of a non-integral element");
  std::uint64_t mod = 1, s = 1;
  for (int k = 0; k < prec; ++k) mod *= ctx_->p();
  for (int k = 0; k < val_; ++k) s *= ctx_->p();
  for (int i = 0; i < ctx_->n(); ++i) out[i] = mulmod(m_[i] % mod, s, mod);
  return out;
}

bool ZqElement::congruent(const ZqElement& b, int prec) const {
  return (*this - b).valuation() >= prec;
}

std::string ZqElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "p^" << val_ << "*(";
  for (int i = 0; i < ctx_->n(); ++i) os << (i ? "," : "") << m_[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

ZqPoly::ZqPoly(const ZqContext& ctx, std::vector<ZqElement> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
  trim();
}

ZqPoly ZqPoly::lift(const ZqContext& ctx, const FqPoly& f) {
  ZqPoly r(ctx);
  for (const auto& c : f.coeffs()) r.c_.push_back(ZqElement::lift(ctx, c));
  r.trim();
  return r;
}

ZqPoly ZqPoly::monomial(const ZqElement& c, int k) {
  ZqPoly r(c.ctx());
  if (c.is_zero()) return r;
  r.c_.assign(static_cast<std::size_t>(k) + 1, ZqElement(c.ctx()));
  r.c_.back() = c;
  return r;
}

void ZqPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZqElement ZqPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return ZqElement(*ctx_);
  return c_[static_cast<std::size_t>(i)];
}

void ZqPoly::set_coeff(int i, const ZqElement& v) {
  if (i > degree()) {
    if (v.is_zero()) return;
    c_.resize(static_cast<std::size_t>(i) + 1, ZqElement(*ctx_));
  }
  c_[static_cast<std::size_t>(i)] = v;
  trim();
}

int ZqPoly::valuation() const {
  int v = kInfVal;
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

ZqPoly& ZqPoly::operator+=(const ZqPoly& b) {
  if (!ctx_) ctx_ = b.ctx_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), ZqElement(*ctx_));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

ZqPoly ZqPoly::operator+(const ZqPoly& b) const {
  ZqPoly r = *this;
  r += b;
  return r;
}

ZqPoly ZqPoly::operator-() const {
  ZqPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ZqPoly ZqPoly::operator-(const ZqPoly& b) const { return *this + (-b); }

ZqPoly ZqPoly::operator*(const ZqPoly& b) const {
  const ZqContext& ctx = ctx_ ? *ctx_ : *b.ctx_;
  ZqPoly r(ctx);
  if (is_zero() || b.is_zero()) return r;
  r.c_.assign(c_.size() + b.c_.size() - 1, ZqElement(ctx));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

ZqPoly ZqPoly::operator*(const ZqElement& s) const {
  ZqPoly r(*ctx_);
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

ZqPoly ZqPoly::mul_int(std::int64_t c) const {
  ZqPoly r(*ctx_);
  for (const auto& e : c_) r.c_.push_back(e.mul_int(c));
  r.trim();
  return r;
}

ZqPoly ZqPoly::div_int(std::int64_t c) const {
  ZqPoly r(*ctx_);
  for (const auto& e : c_) r.c_.push_back(e.div_int(c));
  return r;
}

ZqPoly ZqPoly::shift_x(int k) const {
  if (is_zero() || k == 0) return *this;
  ZqPoly r(*ctx_);
  r.c_.assign(static_cast<std::size_t>(k), ZqElement(*ctx_));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

ZqPoly ZqPoly::derivative() const {
  ZqPoly r(*ctx_);
  for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[i].mul_int(i));
  r.trim();
  return r;
}

ZqPoly ZqPoly::sigma(int j) const {
  ZqPoly r(*ctx_);
  for (const auto& c : c_) r.c_.push_back(c.sigma(j));
  return r;
}

ZqPoly ZqPoly::compose_power(int k) const {
  ZqPoly r(*ctx_);
  if (is_zero()) return r;
  r.c_.assign(static_cast<std::size_t>(degree() * k + 1), ZqElement(*ctx_));
  for (int i = 0; i <= degree(); ++i) r.c_[static_cast<std::size_t>(i * k)] = c_[i];
  return r;
}

ZqPoly ZqPoly::pow(unsigned e) const {
  ZqPoly result = constant(ZqElement::one(*ctx_));
  ZqPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

ZqPoly ZqPoly::truncate(int k) const {
  ZqPoly r = *this;
  if (r.degree() >= k) r.c_.resize(static_cast<std::size_t>(std::max(k, 0)));
  r.trim();
  return r;
}

FqPoly ZqPoly::reduce() const {
  std::vector<FqElement> cs;
  for (const auto& c : c_) cs.push_back(c.reduce());
  return FqPoly(ctx_->field(), std::move(cs));
}

bool ZqPoly::congruent(const ZqPoly& b, int prec) const {
  return (*this - b).valuation() >= prec;
}

std::string ZqPoly::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].to_string();
  os << "]";
  return os.str();
}

std::pair<ZqPoly, ZqPoly> divmod_monic(const ZqPoly& a, const ZqPoly& b) {
  const ZqContext& ctx = b.ctx();
  const int db = b.degree();
  const ZqElement lead = b.leading();
  if (db < 0 || lead.valuation() != 0 || !(lead - ZqElement::one(ctx)).is_zero())
    throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
  if (a.degree() < db) return {ZqPoly(ctx), a};
  std::vector<ZqElement> rem = a.coeffs();
  std::vector<ZqElement> quo(static_cast<std::size_t>(a.degree() - db + 1), ZqElement(ctx));
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    const ZqElement c = rem[k];
    if (c.is_zero()) continue;
    quo[k - db] = c;
    for (int j = 0; j < db; ++j) rem[k - db + j] -= c * bc[j];
  }
  rem.resize(static_cast<std::size_t>(db), ZqElement(ctx));
  return {ZqPoly(ctx, std::move(quo)), ZqPoly(ctx, std::move(rem))};
}

}  // namespace zetafrob
