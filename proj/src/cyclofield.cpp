#include "qcong/cyclofield.hpp"

#include <sstream>
#include <utility>

#include "qcong/qcomb.hpp"

namespace qcong {

namespace {

RatPoly phi_rat(unsigned long m) { return RatPoly(cyclotomic(m)); }

// exponent mod m as a nonnegative machine integer
unsigned long mod_to_ulong(const mpz_class& e, unsigned long m) {
  mpz_class r;
  mpz_class mm = static_cast<unsigned long>(m);
  mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), mm.get_mpz_t());
  return r.get_ui();
}

}  // namespace

CycloElement::CycloElement(unsigned long m)
    : order_(m), coef_(totient(m), mpq_class(0)) {}

CycloElement CycloElement::from_rational(unsigned long m,
                                         const mpq_class& value) {
  CycloElement e(m);
  e.coef_[0] = value;
  e.coef_[0].canonicalize();
  return e;
}

bool CycloElement::is_zero() const {
  for (const auto& c : coef_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coef_.size(); ++i) {
    if (coef_[i] != 0) return false;
  }
  return true;
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  if (order_ != rhs.order_) {
    throw OrderMismatch("add: orders " + std::to_string(order_) + " and " +
                        std::to_string(rhs.order_));
  }
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += rhs.coef_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  if (order_ != rhs.order_) {
    throw OrderMismatch("sub: orders " + std::to_string(order_) + " and " +
                        std::to_string(rhs.order_));
  }
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
  return *this;
}

CycloElement CycloElement::operator-() const {
  CycloElement r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

CycloElement& CycloElement::operator*=(const mpq_class& scale) {
  for (auto& c : coef_) c *= scale;
  return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (a.order_ != b.order_) {
    throw OrderMismatch("mul: orders " + std::to_string(a.order_) + " and " +
                        std::to_string(b.order_));
  }
  return from_poly(a.order_, a.to_poly() * b.to_poly());
}

RatPoly CycloElement::to_poly() const {
  return RatPoly(std::vector<mpq_class>(coef_));
}

CycloElement from_poly(unsigned long m, const RatPoly& p) {
  RatPoly rem = p.degree() < static_cast<long>(totient(m))
                    ? p
                    : divrem(p, phi_rat(m)).rem;
  // Width is phi(m); the remainder's degree is strictly smaller.
  std::vector<mpq_class> out(totient(m), mpq_class(0));
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem.coeffs()[i];
  return CycloElement(m, std::move(out));
}

CycloElement zeta_pow(unsigned long m, const mpz_class& e) {
  const unsigned long r = mod_to_ulong(e, m);
  std::vector<mpq_class> mono(r + 1, mpq_class(0));
  mono[r] = 1;
  return from_poly(m, RatPoly(std::move(mono)));
}

CycloElement inverse(const CycloElement& a) {
  if (a.is_zero()) throw ZeroInverse("inverse of zero element");
  const unsigned long m = a.order();
  // Extended Euclid on (Phi_m, a): maintain t with t * a = r (mod Phi_m),
  // normalizing each remainder to monic so the final gcd constant is 1.
  RatPoly r0 = phi_rat(m);
  RatPoly r1 = a.to_poly();
  RatPoly t0;          // coefficient of a for r0: 0
  RatPoly t1(1);       // coefficient of a for r1: 1
  {
    const mpq_class lead = r1.coeffs().back();
    if (lead != 1) {
      const mpq_class inv_lead = 1 / lead;
      r1 *= inv_lead;
      t1 *= inv_lead;
    }
  }
  while (r1.degree() > 0) {
    RatDivRem d = divrem(r0, r1);
    RatPoly r2 = std::move(d.rem);
    RatPoly t2 = t0 - d.quot * t1;
    if (!r2.is_zero()) {
      const mpq_class lead = r2.coeffs().back();
      if (lead != 1) {
        const mpq_class inv_lead = 1 / lead;
        r2 *= inv_lead;
        t2 *= inv_lead;
      }
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.is_zero()) {
    throw InternalGcd("gcd with Phi_" + std::to_string(m) +
                      " has positive degree");
  }
  // r1 is the constant 1 after normalization, so t1 * a = 1 (mod Phi_m).
  return from_poly(m, t1);
}

std::vector<CycloElement> batch_inverse(const std::vector<CycloElement>& xs) {
  if (xs.empty()) return {};
  std::vector<CycloElement> prefix;
  prefix.reserve(xs.size());
  prefix.push_back(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    prefix.push_back(prefix.back() * xs[i]);
  }
  CycloElement inv = inverse(prefix.back());
  std::vector<CycloElement> out(xs.size(), CycloElement(xs[0].order()));
  for (std::size_t i = xs.size(); i-- > 1;) {
    out[i] = inv * prefix[i - 1];
    inv = inv * xs[i];
  }
  out[0] = inv;
  return out;
}

namespace {

// Shared driver: sum of sign_k * zeta^{num_exp(k)} / (1 - zeta^{den_exp(k)}).
template <class SignFn, class NumFn, class DenFn>
CycloElement weighted_root_sum(unsigned long m, long long k_lo, long long k_hi,
                               SignFn sign, NumFn num_exp, DenFn den_exp) {
  std::vector<CycloElement> nums;
  std::vector<CycloElement> dens;
  const CycloElement one = CycloElement::from_rational(m, 1);
  for (long long k = k_lo; k <= k_hi; ++k) {
    CycloElement t = zeta_pow(m, num_exp(k));
    if (sign(k) < 0) t = -t;
    nums.push_back(std::move(t));
    dens.push_back(one - zeta_pow(m, den_exp(k)));
  }
  const std::vector<CycloElement> invs = batch_inverse(dens);
  CycloElement acc(m);
  for (std::size_t i = 0; i < nums.size(); ++i) acc += nums[i] * invs[i];
  return acc;
}

int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

CycloElement case1_term(unsigned long n, long long k) {
  const unsigned long m = 3 * n;
  const mpz_class kk = static_cast<long>(k);
  const mpz_class num_exp = 3 * kk * (kk + 1) / 2;
  CycloElement t = zeta_pow(m, num_exp);
  if (parity_sign(k) < 0) t = -t;
  const CycloElement den =
      CycloElement::from_rational(m, 1) - zeta_pow(m, 3 * kk + 1);
  return t * inverse(den);
}

CycloElement root_sum_case1(unsigned long n) {
  const unsigned long m = 3 * n;
  return weighted_root_sum(
      m, -static_cast<long long>(n), static_cast<long long>(n) - 1,
      parity_sign,
      [](long long k) {
        const mpz_class kk = static_cast<long>(k);
        return mpz_class(3 * kk * (kk + 1) / 2);
      },
      [](long long k) { return mpz_class(3 * mpz_class(static_cast<long>(k)) + 1); });
}

CycloElement root_sum_case2(unsigned long n) {
  const unsigned long m = 3 * n + 1;
  return weighted_root_sum(
      m, 1, 2 * static_cast<long long>(n), parity_sign,
      [](long long k) {
        const mpz_class kk = static_cast<long>(k);
        return mpz_class(kk * (3 * kk - 1) / 2);
      },
      [](long long k) { return mpz_class(3 * mpz_class(static_cast<long>(k)) - 1); });
}

CycloElement root_sum_case3(unsigned long n) {
  const unsigned long m = 3 * n + 2;
  return weighted_root_sum(
      m, 1, 2 * static_cast<long long>(n) + 1, parity_sign,
      [](long long k) {
        const mpz_class kk = static_cast<long>(k);
        return mpz_class(kk * (3 * kk + 1) / 2);
      },
      [](long long k) { return mpz_class(3 * mpz_class(static_cast<long>(k))); });
}

std::string to_string(const CycloElement& a) {
  std::ostringstream os;
  os << to_string(a.to_poly()) << " in Q(zeta_" << a.order() << ")";
  return os.str();
}

}  // namespace qcong
