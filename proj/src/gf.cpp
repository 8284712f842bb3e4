#include "zetafrob/gf.hpp"

#include <algorithm>
#include <sstream>

#include "zetafrob/error.hpp"

namespace zetafrob {

namespace {

std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint32_t subp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr make_field(std::uint64_t p, int n, std::optional<std::vector<std::uint64_t>> modulus) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31))
    throw Error(ErrorCode::Unsupported, "p must be below 2^31");
  if (n < 1 || n > kMaxExtDegree)
    throw Error(ErrorCode::Unsupported,
                "extension degree must lie in [1, " + std::to_string(kMaxExtDegree) + "]");
  auto pp = static_cast<std::uint32_t>(p);

  std::vector<std::uint32_t> m;
  if (!modulus) {
    if (n > 1)
      throw Error(ErrorCode::MissingModulus, "a defining polynomial is required when n > 1");
    m = {0, 1};
  } else {
    if (static_cast<int>(modulus->size()) != n + 1)
      throw Error(ErrorCode::InvalidArgument,
                  "modulus must have n + 1 = " + std::to_string(n + 1) + " coefficients");
    for (auto c : *modulus) m.push_back(static_cast<std::uint32_t>(c % p));
    if (m.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
  }

  // shared_ptr with a private constructor
  FieldPtr field(new FieldDesc(pp, n, m));
  if (n > 1) {
    FieldPtr prime(new FieldDesc(pp, 1, {0, 1}));
    std::vector<FqElement> cs;
    for (auto c : m) cs.push_back(prime->from_int(c));
    if (!is_irreducible(FqPoly(*prime, std::move(cs))))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  }
  return field;
}

FieldDesc::FieldDesc(std::uint32_t p, int n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < n; ++i) {
    if (q_ > UINT64_MAX / p) throw Error(ErrorCode::Unsupported, "q = p^n overflows 64 bits");
    q_ *= p;
  }
}

FqElement FieldDesc::zero() const { return FqElement(*this); }

FqElement FieldDesc::one() const { return from_int(1); }

FqElement FieldDesc::from_int(std::int64_t v) const {
  FqElement e(*this);
  e.coords()[0] = reduce_signed(v, p_);
  return e;
}

FqElement FieldDesc::from_coords(std::span<const std::int64_t> coords) const {
  if (static_cast<int>(coords.size()) > n_)
    throw Error(ErrorCode::InvalidArgument, "too many coordinates for F_q element");
  FqElement e(*this);
  for (std::size_t i = 0; i < coords.size(); ++i) e.coords()[i] = reduce_signed(coords[i], p_);
  return e;
}

FqElement FieldDesc::generator() const {
  if (n_ == 1) {
    // F_p[t]/(t - c): t is the constant c
    return from_int(static_cast<std::int64_t>(subp(0, modulus_[0], p_)));
  }
  FqElement e(*this);
  e.coords()[1] = 1;
  return e;
}

FqElement FieldDesc::element_at(std::uint64_t index) const {
  FqElement e(*this);
  for (int i = 0; i < n_; ++i) {
    e.coords()[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FieldDesc::index_of(const FqElement& a) const {
  std::uint64_t idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

void FieldDesc::mul_coords(const std::uint32_t* a, const std::uint32_t* b,
                           std::uint32_t* out) const {
  std::uint64_t tmp[2 * kMaxExtDegree] = {};
  const std::uint64_t p = p_;
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) tmp[i + j] = (tmp[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    std::uint64_t c = tmp[k];
    if (c == 0) continue;
    for (int j = 0; j < n_; ++j)
      tmp[k - n_ + j] = (tmp[k - n_ + j] + (p - c) * modulus_[j]) % p;
  }
  for (int i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(tmp[i]);
}

// ---------------------------------------------------------------------------

const FieldDesc& FqElement::field() const {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "element has no field");
  return *field_;
}

void FqElement::check_same(const FqElement& b) const {
  if (!field_ || !b.field_ || !field_->same_as(*b.field_))
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

bool FqElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FqElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FqElement FqElement::operator+(const FqElement& b) const {
  check_same(b);
  FqElement r(*field_);
  const auto p = field_->p();
  for (int i = 0; i < field_->n(); ++i) r.c_[i] = addp(c_[i], b.c_[i], p);
  return r;
}

FqElement FqElement::operator-(const FqElement& b) const {
  check_same(b);
  FqElement r(*field_);
  const auto p = field_->p();
  for (int i = 0; i < field_->n(); ++i) r.c_[i] = subp(c_[i], b.c_[i], p);
  return r;
}

FqElement FqElement::operator-() const {
  FqElement r(field());
  for (int i = 0; i < field_->n(); ++i) r.c_[i] = subp(0, c_[i], field_->p());
  return r;
}

FqElement FqElement::operator*(const FqElement& b) const {
  check_same(b);
  FqElement r(*field_);
  field_->mul_coords(c_.data(), b.c_.data(), r.c_.data());
  return r;
}

FqElement FqElement::pow(std::uint64_t e) const {
  FqElement result = field().one();
  FqElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FqElement FqElement::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_q");
  return pow(field_->q() - 2);
}

FqElement FqElement::frobenius() const { return pow(field().p()); }

bool FqElement::is_square() const {
  if (is_zero()) return true;
  return pow((field_->q() - 1) / 2).is_one();
}

bool FqElement::operator==(const FqElement& b) const {
  if (field_ && b.field_ && !field_->same_as(*b.field_)) return false;
  return c_ == b.c_;
}

std::string FqElement::to_string() const {
  std::ostringstream os;
  const int n = field_ ? field_->n() : 1;
  for (int i = 0; i < n; ++i) os << (i ? ":" : "") << c_[i];
  return os.str();
}

// ---------------------------------------------------------------------------

FqPoly::FqPoly(const FieldDesc& field, std::vector<FqElement> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!c.field().same_as(field))
      throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
  trim();
}

FqPoly FqPoly::monomial(const FqElement& c, int k) {
  FqPoly r(c.field());
  if (c.is_zero()) return r;
  r.c_.assign(static_cast<std::size_t>(k) + 1, c.field().zero());
  r.c_.back() = c;
  return r;
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqElement FqPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_->zero();
  return c_[static_cast<std::size_t>(i)];
}

FqElement FqPoly::leading() const { return is_zero() ? field_->zero() : c_.back(); }

FqPoly FqPoly::operator+(const FqPoly& b) const {
  if (!field_->same_as(*b.field_)) throw Error(ErrorCode::FieldMismatch, "poly add");
  FqPoly r(*field_);
  const int n = std::max(degree(), b.degree()) + 1;
  r.c_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r.c_.push_back(coeff(i) + b.coeff(i));
  r.trim();
  return r;
}

FqPoly FqPoly::operator-(const FqPoly& b) const { return *this + (-b); }

FqPoly FqPoly::operator-() const {
  FqPoly r(*field_);
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

FqPoly FqPoly::operator*(const FqPoly& b) const {
  if (!field_->same_as(*b.field_)) throw Error(ErrorCode::FieldMismatch, "poly mul");
  FqPoly r(*field_);
  if (is_zero() || b.is_zero()) return r;
  r.c_.assign(c_.size() + b.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

FqPoly FqPoly::operator*(const FqElement& s) const {
  FqPoly r(*field_);
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

FqPoly FqPoly::derivative() const {
  FqPoly r(*field_);
  for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[i] * field_->from_int(i));
  r.trim();
  return r;
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

FqElement FqPoly::eval(const FqElement& x) const {
  FqElement acc = field_->zero();
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

bool FqPoly::operator==(const FqPoly& b) const {
  return field_->same_as(*b.field_) && c_ == b.c_;
}

std::string FqPoly::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].to_string();
  os << "]";
  return os.str();
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const FieldDesc& F = a.field();
  const int db = b.degree();
  if (a.degree() < db) return {FqPoly(F), a};
  std::vector<FqElement> rem = a.coeffs();
  std::vector<FqElement> quo(static_cast<std::size_t>(a.degree() - db + 1), F.zero());
  const FqElement lead_inv = b.leading().inv();
  for (int k = a.degree(); k >= db; --k) {
    FqElement c = rem[k] * lead_inv;
    if (c.is_zero()) continue;
    quo[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {FqPoly(F, std::move(quo)), FqPoly(F, std::move(rem))};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

FqPoly poly_gcd(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  FqPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    FqPoly r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Xgcd poly_xgcd(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "xgcd(0, 0) is undefined");
  const FieldDesc& F = a.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::monomial(F.one(), 0), s1(F);
  FqPoly t0(F), t1 = FqPoly::monomial(F.one(), 0);
  while (!r1.is_zero()) {
    auto [qt, r2] = divmod(r0, r1);
    FqPoly s2 = s0 - qt * s1;
    FqPoly t2 = t0 - qt * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  const FqElement li = r0.leading().inv();
  return {r0 * li, s0 * li, t0 * li};
}

FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& mod) {
  const FieldDesc& F = base.field();
  FqPoly result = FqPoly::monomial(F.one(), 0) % mod;
  FqPoly b = base % mod;
  while (e) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return result;
}

bool is_separable(const FqPoly& Q) {
  if (Q.degree() < 3)
    throw Error(ErrorCode::DegreeTooSmall, "need deg Q >= 3 for a curve of genus >= 1");
  return poly_gcd(Q, Q.derivative()).degree() == 0;
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const FieldDesc& F = f.field();
  const FqPoly x = FqPoly::x(F);
  FqPoly xp = x % f;  // x^(q^i) mod f
  for (int i = 1; i < n; ++i) {
    xp = powmod(xp, F.q(), f);
    if (poly_gcd(xp - x, f).degree() != 0) return false;
  }
  xp = powmod(xp, F.q(), f);
  return xp == x % f;
}

}  // namespace zetafrob
