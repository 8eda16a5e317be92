// Cyclotomic field layer: power-basis arithmetic in Q(zeta_m), inverses,
// and the three root-of-unity sum evaluations.  Expected values marked
// "frozen" were computed with an independent CAS.
#include <doctest.h>

#include <vector>

#include "qcong/cyclofield.hpp"
#include "qcong/errors.hpp"
#include "qcong/qcomb.hpp"

using namespace qcong;

namespace {

mpq_class q(long num, long den = 1) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace

TEST_CASE("elements carry a fixed-width coefficient vector") {
  CycloElement z(12);
  CHECK(z.order() == 12);
  CHECK(z.coeffs().size() == totient(12));
  CHECK(z.is_zero());
  CHECK(z.is_rational());
  CHECK(z.rational_part() == 0);

  CycloElement half = CycloElement::from_rational(7, q(1, 2));
  CHECK(half.coeffs().size() == 6);
  CHECK_FALSE(half.is_zero());
  CHECK(half.is_rational());
  CHECK(half.rational_part() == q(1, 2));
}

TEST_CASE("zeta powers wrap modulo the order") {
  CHECK(zeta_pow(5, 0_mpz) == CycloElement::from_rational(5, 1));
  CHECK(zeta_pow(5, 5_mpz) == zeta_pow(5, 0_mpz));
  CHECK(zeta_pow(5, 7_mpz) == zeta_pow(5, 2_mpz));
  CHECK(zeta_pow(5, -1_mpz) == zeta_pow(5, 4_mpz));
  CHECK(zeta_pow(5, -13_mpz) == zeta_pow(5, 2_mpz));
  // zeta_4^2 reduces to -1 through Phi_4 = q^2 + 1.
  CHECK(zeta_pow(4, 2_mpz) == CycloElement::from_rational(4, -1));
  CHECK(zeta_pow(2, 1_mpz) == CycloElement::from_rational(2, -1));
  CHECK(zeta_pow(1, 1_mpz) == CycloElement::from_rational(1, 1));
}

TEST_CASE("exponent arithmetic matches ring multiplication") {
  for (unsigned long m : {3ul, 4ul, 7ul, 9ul, 12ul}) {
    for (long a = 0; a < static_cast<long>(m); ++a) {
      for (long b = 0; b < static_cast<long>(m); ++b) {
        CHECK(zeta_pow(m, mpz_class(a)) * zeta_pow(m, mpz_class(b)) ==
              zeta_pow(m, mpz_class(a + b)));
      }
    }
  }
}

TEST_CASE("the full geometric sum of roots vanishes") {
  for (unsigned long m = 2; m <= 24; ++m) {
    CycloElement acc(m);
    for (unsigned long j = 0; j < m; ++j) acc += zeta_pow(m, mpz_class(j));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("mixed orders are rejected") {
  CycloElement a = CycloElement::from_rational(5, 1);
  CycloElement b = CycloElement::from_rational(7, 1);
  CHECK_THROWS_AS(a + b, OrderMismatch);
  CHECK_THROWS_AS(a - b, OrderMismatch);
  CHECK_THROWS_AS(a * b, OrderMismatch);
}

TEST_CASE("from_poly reduces modulo the cyclotomic polynomial") {
  // q^2 = -1 in Q(zeta_4).
  RatPoly sq(std::vector<mpq_class>{0, 0, 1});
  CHECK(from_poly(4, sq) == CycloElement::from_rational(4, -1));
  // Degree below phi(9) passes through unchanged.
  CycloElement e = from_poly(9, RatPoly(std::vector<mpq_class>{0, 0, 0, 1}));
  CHECK(e == zeta_pow(9, 3_mpz));
  CHECK(from_poly(7, RatPoly()).is_zero());
}

TEST_CASE("to_poly and from_poly round trip") {
  for (unsigned long m : {4ul, 7ul, 10ul}) {
    CycloElement a = zeta_pow(m, 1_mpz) + CycloElement::from_rational(m, q(2, 3));
    CHECK(from_poly(m, a.to_poly()) == a);
  }
}

TEST_CASE("inverse of 1 - zeta_4 is (1 + zeta) / 2") {
  CycloElement one = CycloElement::from_rational(4, 1);
  CycloElement a = one - zeta_pow(4, 1_mpz);
  CycloElement inv = inverse(a);
  CHECK(inv.coeffs() == std::vector<mpq_class>{q(1, 2), q(1, 2)});
  CHECK(a * inv == one);
}

TEST_CASE("inverse of 1 - zeta_7 matches the frozen expansion") {
  // Frozen: (6 + 5z + 4z^2 + 3z^3 + 2z^4 + z^5) / 7.
  CycloElement one = CycloElement::from_rational(7, 1);
  CycloElement inv = inverse(one - zeta_pow(7, 1_mpz));
  CHECK(inv.coeffs() == std::vector<mpq_class>{q(6, 7), q(5, 7), q(4, 7),
                                               q(3, 7), q(2, 7), q(1, 7)});
  CHECK((one - zeta_pow(7, 1_mpz)) * inv == one);
}

TEST_CASE("inverse round trips on assorted elements") {
  for (unsigned long m : {3ul, 5ul, 8ul, 12ul, 15ul}) {
    CycloElement one = CycloElement::from_rational(m, 1);
    for (long j = 0; j < static_cast<long>(m); ++j) {
      CycloElement a = zeta_pow(m, mpz_class(j)) +
                       CycloElement::from_rational(m, q(j + 2, 3));
      if (a.is_zero()) continue;
      CHECK(a * inverse(a) == one);
    }
    // Roots themselves invert to their negated exponent.
    CHECK(inverse(zeta_pow(m, 1_mpz)) == zeta_pow(m, -1_mpz));
  }
}

TEST_CASE("inverting zero is rejected") {
  CHECK_THROWS_AS(inverse(CycloElement(6)), ZeroInverse);
  std::vector<CycloElement> with_zero{zeta_pow(6, 1_mpz), CycloElement(6)};
  CHECK_THROWS_AS(batch_inverse(with_zero), ZeroInverse);
}

TEST_CASE("batch inversion matches elementwise inversion") {
  for (unsigned long m : {5ul, 9ul, 16ul}) {
    std::vector<CycloElement> xs;
    for (long j = 1; j <= 6; ++j) {
      xs.push_back(CycloElement::from_rational(m, q(j)) + zeta_pow(m, mpz_class(j)));
    }
    std::vector<CycloElement> invs = batch_inverse(xs);
    REQUIRE(invs.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(invs[i] == inverse(xs[i]));
    }
  }
  CHECK(batch_inverse({}).empty());
}

TEST_CASE("scalar arithmetic stays canonical") {
  CycloElement a = CycloElement::from_rational(5, q(2, 4));
  CHECK(a.rational_part() == q(1, 2));
  a *= q(2);
  CHECK(a == CycloElement::from_rational(5, 1));
  CHECK((-a).rational_part() == -1);
}

TEST_CASE("first root sum vanishes identically") {
  for (unsigned long n = 1; n <= 8; ++n) {
    CHECK(root_sum_case1(n).is_zero());
  }
}

TEST_CASE("second root sum evaluates to -n/2") {
  for (unsigned long n = 1; n <= 8; ++n) {
    CycloElement s = root_sum_case2(n);
    CHECK(s.is_rational());
    CHECK(s.rational_part() == q(-static_cast<long>(n), 2));
  }
}

TEST_CASE("third root sum evaluates to -(n+1)/2") {
  for (unsigned long n = 1; n <= 8; ++n) {
    CycloElement s = root_sum_case3(n);
    CHECK(s.is_rational());
    CHECK(s.rational_part() == q(-static_cast<long>(n) - 1, 2));
  }
}

TEST_CASE("first-sum terms pair up antisymmetrically") {
  // C_{n-k} = -C_{-k}: the involution behind the telescoping of case 1.
  for (unsigned long n = 1; n <= 6; ++n) {
    for (long long k = 1; k <= static_cast<long long>(n); ++k) {
      CHECK(case1_term(n, static_cast<long long>(n) - k) ==
            -case1_term(n, -k));
    }
  }
}

TEST_CASE("to_string shows the power basis") {
  CycloElement a = CycloElement::from_rational(4, q(3, 2)) + zeta_pow(4, 1_mpz);
  std::string s = to_string(a);
  CHECK(s == "q + 3/2 in Q(zeta_4)");
}
