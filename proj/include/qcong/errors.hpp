// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

// Exact division was requested but the divisor does not divide the dividend.
struct NotDivisible : std::domain_error {
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

// divrem_monic was called with a divisor that is zero or not monic.
struct NotMonic : std::domain_error {
  explicit NotMonic(const std::string& what) : std::domain_error(what) {}
};

// Multiplicative inverse of zero was requested in a cyclotomic field.
struct ZeroInverse : std::domain_error {
  explicit ZeroInverse(const std::string& what) : std::domain_error(what) {}
};

// The extended Euclidean algorithm terminated with a gcd of positive degree.
// The reduction moduli are irreducible, so this indicates an internal bug.
struct InternalGcd : std::logic_error {
  explicit InternalGcd(const std::string& what) : std::logic_error(what) {}
};

// Binary field operation on elements of different cyclotomic orders.
struct OrderMismatch : std::domain_error {
  explicit OrderMismatch(const std::string& what) : std::domain_error(what) {}
};

// A checker requiring a prime modulus was given a composite.
struct NotPrime : std::domain_error {
  explicit NotPrime(const std::string& what) : std::domain_error(what) {}
};

// A checker's precondition p >= bound failed.
struct PrimeTooSmall : std::domain_error {
  explicit PrimeTooSmall(const std::string& what) : std::domain_error(what) {}
};

// A checker requiring an odd parameter was given an even one.
struct EvenN : std::domain_error {
  explicit EvenN(const std::string& what) : std::domain_error(what) {}
};

// An intermediate polynomial exceeded the active degree limit.
struct DegreeGuardExceeded : std::runtime_error {
  explicit DegreeGuardExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qcong
