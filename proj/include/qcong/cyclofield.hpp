// Exact arithmetic in cyclotomic fields Q(zeta_m) ~ Q[q]/Phi_m(q), and the
// three root-of-unity sum evaluations the congruence proofs reduce to.
#pragma once

#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"
#include "qcong/ratpoly.hpp"

namespace qcong {

// An element of Q(zeta_m) as its residue in the power basis
// 1, zeta, ..., zeta^{phi(m)-1}.  Fixed-width coefficient vector: trailing
// zeros are retained so equality is plain coefficient comparison.
class CycloElement {
 public:
  // The zero element of Q(zeta_m).
  explicit CycloElement(unsigned long m);

  static CycloElement from_rational(unsigned long m, const mpq_class& value);

  unsigned long order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coef_; }

  bool is_zero() const;
  // True when all non-constant coordinates vanish.
  bool is_rational() const;
  // The constant coordinate; meaningful for any element, the full value
  // only when is_rational().
  const mpq_class& rational_part() const { return coef_[0]; }

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement operator-() const;
  CycloElement& operator*=(const mpq_class& scale);

  friend CycloElement operator+(CycloElement a, const CycloElement& b) {
    return a += b;
  }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) {
    return a -= b;
  }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(CycloElement a, const mpq_class& s) {
    return a *= s;
  }
  friend bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.order_ == b.order_ && a.coef_ == b.coef_;
  }

  // The residue as a polynomial (trailing zeros dropped).
  RatPoly to_poly() const;

 private:
  CycloElement(unsigned long m, std::vector<mpq_class> coeffs)
      : order_(m), coef_(std::move(coeffs)) {}

  friend CycloElement from_poly(unsigned long m, const RatPoly& p);

  unsigned long order_;
  std::vector<mpq_class> coef_;
};

// Residue of p modulo Phi_m, padded to width phi(m).
CycloElement from_poly(unsigned long m, const RatPoly& p);

// zeta_m^e for any integer exponent (reduced mod m first).
CycloElement zeta_pow(unsigned long m, const mpz_class& e);

// Multiplicative inverse by the extended Euclidean algorithm over Q[q].
// Throws ZeroInverse on zero; InternalGcd if the gcd has positive degree,
// which cannot happen for irreducible Phi_m.
CycloElement inverse(const CycloElement& a);

// Montgomery batch inversion: one extended Euclid plus 3(size-1) products.
// Throws ZeroInverse if any input is zero.
std::vector<CycloElement> batch_inverse(const std::vector<CycloElement>& xs);

// The term C_k = (-1)^k alpha^{3k(k+1)/2} / (1 - alpha^{3k+1}) with alpha a
// primitive 3n-th root of unity; defined for every integer k since 3k+1 is
// never divisible by 3n.
CycloElement case1_term(unsigned long n, long long k);

// sum_{k=-n}^{n-1} C_k over Q(zeta_{3n}); identically 0.
CycloElement root_sum_case1(unsigned long n);

// sum_{k=1}^{2n} (-1)^k zeta^{k(3k-1)/2} / (1 - zeta^{3k-1}) with zeta a
// primitive (3n+1)-th root of unity; equals -n/2.
CycloElement root_sum_case2(unsigned long n);

// sum_{k=1}^{2n+1} (-1)^k omega^{k(3k+1)/2} / (1 - omega^{3k}) with omega a
// primitive (3n+2)-th root of unity; equals -(n+1)/2.
CycloElement root_sum_case3(unsigned long n);

std::string to_string(const CycloElement& a);

}  // namespace qcong
