// Dense univariate polynomials over arbitrary-precision integers, the value
// type every congruence check reduces to.  Coefficients are stored low degree
// first; the last stored coefficient is nonzero, so zero has no coefficients
// and degree() == -1.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"

namespace qcong {

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long value) : IntPoly(mpz_class(value)) {}  // NOLINT: implicit
  explicit IntPoly(mpz_class value);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly monomial(std::size_t exponent, mpz_class scale = 1);

  bool is_zero() const { return coef_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coef_.size()) - 1; }
  std::size_t size() const { return coef_.size(); }
  bool is_monic() const { return !coef_.empty() && coef_.back() == 1; }

  // Coefficient of q^i; zero beyond the stored range.
  const mpz_class& operator[](std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const { return coef_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& scale);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coef_ == b.coef_;
  }

  // Drops trailing zeros; every mutating path ends here.
  void normalize();

  // Direct access for kernels that build coefficients in place.  The caller
  // must restore the trailing-nonzero invariant via normalize().
  std::vector<mpz_class>& raw_coeffs() { return coef_; }

 private:
  std::vector<mpz_class> coef_;
};

struct DivRem {
  IntPoly quot;
  IntPoly rem;
};

// Serial reference product; dispatching operator* must agree with it.
IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b);
// Karatsuba with an explicit recursion cutoff, for threshold-independence
// tests.  The default matches the dispatcher.
IntPoly mul_karatsuba(const IntPoly& a, const IntPoly& b,
                      std::size_t threshold = 32);

// p * q^e.
IntPoly monomial_mul(const IntPoly& p, std::size_t e);
// p * (q^e - 1), one pass.
IntPoly mul_qpow_minus_one(const IntPoly& p, std::size_t e);
// p / (q^e - 1); throws NotDivisible when the division is inexact.
IntPoly divexact_qpow_minus_one(const IntPoly& p, std::size_t e);

// Euclidean division by a monic divisor: a = quot * b + rem with
// deg rem < deg b.  Throws NotMonic when b is zero or not monic.
DivRem divrem_monic(const IntPoly& a, const IntPoly& b);
// a / b for exact monic division; throws NotDivisible on a nonzero remainder.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& p, unsigned long e);
mpz_class eval_int(const IntPoly& p, const mpz_class& x);
mpz_class content(const IntPoly& p);

// Human-readable form, highest degree first, e.g. "q^2 - 3*q + 1".
std::string to_string(const IntPoly& p);

// Thread-local cap on the coefficient count of freshly built polynomials;
// 0 means unlimited.  Exceeding it throws DegreeGuardExceeded, which sweep
// workers record as a failure instead of crashing the run.
class ScopedDegreeLimit {
 public:
  explicit ScopedDegreeLimit(std::size_t max_terms);
  ~ScopedDegreeLimit();
  ScopedDegreeLimit(const ScopedDegreeLimit&) = delete;
  ScopedDegreeLimit& operator=(const ScopedDegreeLimit&) = delete;

 private:
  std::size_t saved_;
};

std::size_t current_term_limit();

namespace detail {
// Throws DegreeGuardExceeded if nterms exceeds the active limit.
void enforce_term_limit(std::size_t nterms);
}  // namespace detail

}  // namespace qcong
