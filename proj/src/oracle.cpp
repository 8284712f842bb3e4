#include "zetafrob/oracle.hpp"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetafrob/error.hpp"

namespace zetafrob {

ExtensionField::ExtensionField(FieldPtr base, int r, std::uint64_t seed)
    : base_(std::move(base)), r_(r), n_(base_->n()), size_(1), h_(*base_) {
  if (r < 1 || r * n_ > kMaxCoords)
    throw Error(ErrorCode::TooLarge, "extension degree " + std::to_string(r) + " out of range");
  for (int i = 0; i < r; ++i) {
    if (size_ > UINT64_MAX / base_->q()) throw Error(ErrorCode::TooLarge, "q^r overflows");
    size_ *= base_->q();
  }
  const FieldDesc& F = *base_;
  if (r == 1) {
    h_ = FqPoly::x(F);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, F.q() - 1);
    for (;;) {
      std::vector<FqElement> c;
      for (int i = 0; i < r; ++i) c.push_back(F.element_at(pick(rng)));
      c.push_back(F.one());
      FqPoly h(F, std::move(c));
      if (is_irreducible(h)) {
        h_ = std::move(h);
        break;
      }
    }
  }
  for (int j = 0; j < r; ++j) h_low_.push_back(embed(-h_.coeff(j)));
}

ExtensionField::Elem ExtensionField::element_at(std::uint64_t index) const {
  Elem e{};
  const std::uint32_t p = base_->p();
  for (int i = 0; i < r_ * n_; ++i) {
    e[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return e;
}

std::uint64_t ExtensionField::index_of(const Elem& a) const {
  std::uint64_t idx = 0;
  for (int i = r_ * n_ - 1; i >= 0; --i) idx = idx * base_->p() + a[i];
  return idx;
}

ExtensionField::Elem ExtensionField::embed(const FqElement& c) const {
  Elem e{};
  for (int i = 0; i < n_; ++i) e[i] = c[i];
  return e;
}

bool ExtensionField::is_zero(const Elem& a) const {
  for (int i = 0; i < r_ * n_; ++i)
    if (a[i]) return false;
  return true;
}

void ExtensionField::add(const Elem& a, const Elem& b, Elem& out) const {
  const std::uint32_t p = base_->p();
  for (int i = 0; i < r_ * n_; ++i) {
    const std::uint32_t s = a[i] + b[i];
    out[i] = s >= p ? s - p : s;
  }
}

void ExtensionField::mul(const Elem& a, const Elem& b, Elem& out) const {
  const int n = n_;
  const std::uint32_t p = base_->p();
  // product blocks of degree < 2r - 1 over F_q
  std::uint32_t prod[2 * kMaxCoords] = {};
  std::uint32_t t[kMaxExtDegree];
  auto accumulate = [&](std::uint32_t* dst, const std::uint32_t* src) {
    for (int i = 0; i < n; ++i) {
      const std::uint32_t s = dst[i] + src[i];
      dst[i] = s >= p ? s - p : s;
    }
  };
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      base_->mul_coords(&a[i * n], &b[j * n], t);
      accumulate(&prod[(i + j) * n], t);
    }
  // u^r = -sum h_j u^j
  for (int k = 2 * r_ - 2; k >= r_; --k) {
    for (int j = 0; j < r_; ++j) {
      base_->mul_coords(&prod[k * n], &h_low_[j][0], t);
      accumulate(&prod[(k - r_ + j) * n], t);
    }
  }
  for (int i = 0; i < r_ * n; ++i) out[i] = prod[i];
}

ExtensionField::Elem ExtensionField::pow(const Elem& a, std::uint64_t e) const {
  Elem result{};
  result[0] = 1;
  Elem base = a;
  while (e) {
    if (e & 1) mul(result, base, result);
    e >>= 1;
    if (e) mul(base, base, base);
  }
  return result;
}

ExtensionField::Elem ExtensionField::eval(const std::vector<Elem>& coeffs, const Elem& x) const {
  Elem acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    mul(acc, x, acc);
    add(acc, *it, acc);
  }
  return acc;
}

std::uint64_t count_points(const FieldPtr& field, const FqPoly& Q, int r, std::uint64_t seed,
                           Exec exec, std::uint64_t limit) {
  const int d = Q.degree();
  if (d < 3) throw Error(ErrorCode::DegreeTooSmall, "deg Q must be at least 3");
  std::uint64_t size = 1;
  for (int i = 0; i < r; ++i) {
    if (size > limit / field->q())
      throw Error(ErrorCode::TooLarge, "q^" + std::to_string(r) + " exceeds the enumeration limit");
    size *= field->q();
  }
  const ExtensionField E(field, r, seed);
  std::vector<ExtensionField::Elem> coeffs;
  for (const auto& c : Q.coeffs()) coeffs.push_back(E.embed(c));

  std::uint64_t affine = 0;
  const auto total = static_cast<std::int64_t>(size);
  if (exec == Exec::Parallel) {
    std::vector<std::uint8_t> square(size, 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto z = E.element_at(static_cast<std::uint64_t>(idx));
      ExtensionField::Elem z2;
      E.mul(z, z, z2);
      const std::uint64_t at = E.index_of(z2);
#pragma omp atomic write
      square[at] = 1;
    }
#pragma omp parallel for reduction(+ : affine) schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto v = E.eval(coeffs, E.element_at(static_cast<std::uint64_t>(idx)));
      if (E.is_zero(v))
        affine += 1;
      else if (square[E.index_of(v)])
        affine += 2;
    }
  } else {
    const std::uint64_t half = (size - 1) / 2;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      const auto v = E.eval(coeffs, E.element_at(idx));
      if (E.is_zero(v))
        affine += 1;
      else if (E.index_of(E.pow(v, half)) == 1)
        affine += 2;
    }
  }

  std::uint64_t infinity = 1;
  if (d % 2 == 0) {
    const bool lead_square = r % 2 == 0 || Q.leading().is_square();
    infinity = lead_square ? 2 : 0;
  }
  return affine + infinity;
}

CountVector count_vector(const FieldPtr& field, const FqPoly& Q, std::uint64_t seed, Exec exec,
                         std::uint64_t limit) {
  CountVector cv;
  cv.q = field->q();
  cv.g = (Q.degree() - 1) / 2;
  for (int r = 1; r <= cv.g; ++r) cv.counts.push_back(count_points(field, Q, r, seed + r, exec, limit));
  return cv;
}

LPolynomial lpoly_from_counts(const CountVector& cv) {
  using boost::multiprecision::cpp_rational;
  const int g = cv.g;
  if (static_cast<int>(cv.counts.size()) != g)
    throw Error(ErrorCode::InvalidArgument, "expected g point counts");
  std::vector<cpp_rational> s(static_cast<std::size_t>(g) + 1), e(static_cast<std::size_t>(g) + 1);
  BigInt qr = 1;
  for (int r = 1; r <= g; ++r) {
    qr *= cv.q;
    s[r] = cpp_rational(qr + 1 - BigInt(cv.counts[r - 1]));
  }
  e[0] = 1;
  std::vector<BigInt> top;
  for (int r = 1; r <= g; ++r) {
    cpp_rational acc = 0;
    for (int i = 1; i <= r; ++i) acc += (i % 2 ? 1 : -1) * e[r - i] * s[i];
    e[r] = acc / r;
    if (denominator(e[r]) != 1)
      throw Error(ErrorCode::NonIntegralCoefficient,
                  "point counts give a non-integral coefficient c_" + std::to_string(2 * g - r));
    top.push_back((r % 2 ? -1 : 1) * numerator(e[r]));
  }
  return lpoly_from_top(top, cv.q, g);
}

LPolynomial oracle_lpoly(const FieldPtr& field, const FqPoly& Q, std::uint64_t seed, Exec exec,
                         std::uint64_t limit) {
  return lpoly_from_counts(count_vector(field, Q, seed, exec, limit));
}

}  // namespace zetafrob
