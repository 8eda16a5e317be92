#include "qcong/ratpoly.hpp"

#include <sstream>

#include "qcong/detail/dense_mul.hpp"

namespace qcong {

namespace {
const mpq_class kZeroQ = 0;
}  // namespace

RatPoly::RatPoly(mpq_class value) {
  value.canonicalize();
  if (value != 0) coef_.push_back(std::move(value));
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coef_(std::move(coeffs)) {
  // GMP comparisons assume canonical form; callers may hand us raw pairs.
  for (auto& c : coef_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(const IntPoly& p) {
  coef_.reserve(p.size());
  for (const auto& c : p.coeffs()) coef_.emplace_back(c);
}

void RatPoly::normalize() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

const mpq_class& RatPoly::operator[](std::size_t i) const {
  return i < coef_.size() ? coef_[i] : kZeroQ;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
  for (std::size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] += rhs.coef_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
  for (std::size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& scale) {
  if (scale == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& c : coef_) c *= scale;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  detail::enforce_term_limit(a.size() + b.size() - 1);
  RatPoly r;
  r.coef_ = detail::mul_dense(a.coef_, b.coef_);
  r.normalize();
  return r;
}

RatDivRem divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw NotMonic("division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const mpq_class lead_inv = 1 / b.coeffs().back();
  std::vector<mpq_class> rem(a.coeffs());
  std::vector<mpq_class> quot(a.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpq_class t = rem[i + db] * lead_inv;
    if (t == 0) continue;
    for (std::size_t j = 0; j < db; ++j) {
      if (b[j] != 0) rem[i + j] -= t * b[j];
    }
    rem[i + db] = 0;
    quot[i] = std::move(t);
  }
  rem.resize(db);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly scalar_mul(const IntPoly& p, const mpq_class& scale) {
  RatPoly r(p);
  r *= scale;
  return r;
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const mpq_class& c = p[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qcong
