// Dense univariate polynomials over the rationals.  Same storage convention
// as IntPoly; used for arithmetic inside cyclotomic fields, where inverses
// force rational coefficients.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"
#include "qcong/intpoly.hpp"

namespace qcong {

class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(long value) : RatPoly(mpq_class(value)) {}  // NOLINT: implicit
  explicit RatPoly(mpq_class value);
  explicit RatPoly(std::vector<mpq_class> coeffs);
  explicit RatPoly(const IntPoly& p);

  bool is_zero() const { return coef_.empty(); }
  long degree() const { return static_cast<long>(coef_.size()) - 1; }
  std::size_t size() const { return coef_.size(); }
  bool is_monic() const { return !coef_.empty() && coef_.back() == 1; }

  const mpq_class& operator[](std::size_t i) const;
  const std::vector<mpq_class>& coeffs() const { return coef_; }

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const mpq_class& scale);
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
  friend RatPoly operator*(const mpq_class& s, RatPoly a) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.coef_ == b.coef_;
  }

  void normalize();

 private:
  std::vector<mpq_class> coef_;
};

struct RatDivRem {
  RatPoly quot;
  RatPoly rem;
};

// Euclidean division over the rationals; any nonzero divisor is allowed.
RatDivRem divrem(const RatPoly& a, const RatPoly& b);

// p * scale as a rational polynomial, promoting integer coefficients.
RatPoly scalar_mul(const IntPoly& p, const mpq_class& scale);

std::string to_string(const RatPoly& p);

}  // namespace qcong
