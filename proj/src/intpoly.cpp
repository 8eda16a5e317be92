#include "qcong/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qcong/detail/dense_mul.hpp"

namespace qcong {

namespace {
thread_local std::size_t t_term_limit = 0;
const mpz_class kZero = 0;
}  // namespace

ScopedDegreeLimit::ScopedDegreeLimit(std::size_t max_terms)
    : saved_(t_term_limit) {
  t_term_limit = max_terms;
}

ScopedDegreeLimit::~ScopedDegreeLimit() { t_term_limit = saved_; }

std::size_t current_term_limit() { return t_term_limit; }

void detail::enforce_term_limit(std::size_t nterms) {
  if (t_term_limit != 0 && nterms > t_term_limit) {
    throw DegreeGuardExceeded("polynomial would reach " +
                              std::to_string(nterms) +
                              " terms, limit is " +
                              std::to_string(t_term_limit));
  }
}

IntPoly::IntPoly(mpz_class value) {
  if (value != 0) coef_.push_back(std::move(value));
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coef_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::monomial(std::size_t exponent, mpz_class scale) {
  IntPoly p;
  if (scale == 0) return p;
  detail::enforce_term_limit(exponent + 1);
  p.coef_.assign(exponent + 1, kZero);
  p.coef_.back() = std::move(scale);
  return p;
}

void IntPoly::normalize() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

const mpz_class& IntPoly::operator[](std::size_t i) const {
  return i < coef_.size() ? coef_[i] : kZero;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
  for (std::size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] += rhs.coef_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
  for (std::size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& scale) {
  if (scale == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& c : coef_) c *= scale;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  detail::enforce_term_limit(a.size() + b.size() - 1);
  IntPoly r;
  r.coef_ = detail::mul_dense(a.coef_, b.coef_);
  r.normalize();
  return r;
}

IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  detail::enforce_term_limit(a.size() + b.size() - 1);
  return IntPoly(detail::mul_schoolbook_vec(a.coeffs(), b.coeffs()));
}

IntPoly mul_karatsuba(const IntPoly& a, const IntPoly& b,
                      std::size_t threshold) {
  if (a.is_zero() || b.is_zero()) return {};
  if (threshold == 0) threshold = 1;
  detail::enforce_term_limit(a.size() + b.size() - 1);
  return IntPoly(detail::mul_karatsuba_vec(a.coeffs(), b.coeffs(), threshold));
}

IntPoly monomial_mul(const IntPoly& p, std::size_t e) {
  if (p.is_zero() || e == 0) return p;
  detail::enforce_term_limit(p.size() + e);
  IntPoly r;
  auto& c = r.raw_coeffs();
  c.reserve(p.size() + e);
  c.assign(e, 0);
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return r;
}

IntPoly mul_qpow_minus_one(const IntPoly& p, std::size_t e) {
  if (e == 0) return {};  // q^0 - 1 == 0
  if (p.is_zero()) return {};
  detail::enforce_term_limit(p.size() + e);
  IntPoly r;
  auto& v = r.raw_coeffs();
  v.assign(p.size() + e, 0);
  const auto& u = p.coeffs();
  for (std::size_t i = 0; i < u.size(); ++i) {
    v[i + e] += u[i];
    v[i] -= u[i];
  }
  r.normalize();
  return r;
}

IntPoly divexact_qpow_minus_one(const IntPoly& p, std::size_t e) {
  if (e == 0) throw NotDivisible("division by q^0 - 1 == 0");
  if (p.is_zero()) return {};
  const auto& u = p.coeffs();
  if (u.size() <= e) throw NotDivisible("degree too small for q^" +
                                        std::to_string(e) + " - 1");
  // u = v*(q^e - 1) means u_i = v_{i-e} - v_i, so v_i = v_{i-e} - u_i.
  std::vector<mpz_class> v(u.size() - e);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i >= e) {
      v[i] = v[i - e] - u[i];
    } else {
      v[i] = -u[i];
    }
  }
  for (std::size_t i = v.size(); i < u.size(); ++i) {
    const mpz_class& expect = i >= e ? v[i - e] : kZero;
    if (u[i] != expect) {
      throw NotDivisible("polynomial is not divisible by q^" +
                         std::to_string(e) + " - 1");
    }
  }
  return IntPoly(std::move(v));
}

DivRem divrem_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw NotMonic("divisor must be monic and nonzero");
  if (a.degree() < b.degree()) return {IntPoly(), a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t nq = a.size() - db;
  // Nonzero divisor coefficients below the leading 1.
  std::vector<std::pair<std::size_t, const mpz_class*>> lower;
  lower.reserve(db);
  for (std::size_t j = 0; j < db; ++j) {
    if (b[j] != 0) lower.emplace_back(j, &b.coeffs()[j]);
  }
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> quot(nq);
  for (std::size_t i = nq; i-- > 0;) {
    mpz_class& t = rem[i + db];
    if (t == 0) continue;
    for (const auto& [j, c] : lower) {
      mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), c->get_mpz_t());
    }
    quot[i] = std::move(t);
    rem[i + db] = 0;
  }
  rem.resize(db);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  DivRem d = divrem_monic(a, b);
  if (!d.rem.is_zero()) {
    throw NotDivisible("remainder is nonzero in exact division");
  }
  return std::move(d.quot);
}

IntPoly pow(const IntPoly& p, unsigned long e) {
  IntPoly acc(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1UL) acc *= base;
    e >>= 1UL;
    if (e > 0) base *= base;
  }
  return acc;
}

mpz_class eval_int(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
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
