// q-combinatorics layer: q-integers, q-Pochhammer, Gaussian binomials and
// their streaming builders, cyclotomic polynomials, and the small number
// theory helpers.  Vectors marked "frozen" come from an independent CAS.
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qcong/intpoly.hpp"
#include "qcong/qcomb.hpp"

using namespace qcong;

namespace {

IntPoly ipoly(std::vector<long> cs) {
  std::vector<mpz_class> v(cs.begin(), cs.end());
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("chi3 is 3-periodic over all integers") {
  CHECK(chi3(0) == 0);
  CHECK(chi3(1) == 1);
  CHECK(chi3(2) == -1);
  CHECK(chi3(3) == 0);
  CHECK(chi3(7) == 1);
  CHECK(chi3(-1) == -1);
  CHECK(chi3(-2) == 1);
  CHECK(chi3(-3) == 0);
  for (long long k = -30; k <= 30; ++k) CHECK(chi3(k) == chi3(k + 3));
}

TEST_CASE("floor_div rounds toward negative infinity") {
  CHECK(floor_div(7, 3) == 2);
  CHECK(floor_div(-7, 3) == -3);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(floor_div(0, 5) == 0);
  CHECK(floor_div(-1, 4) == -1);
}

TEST_CASE("totient on small arguments") {
  const unsigned long expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (unsigned long n = 1; n <= 12; ++n) CHECK(totient(n) == expected[n]);
  CHECK(totient(105) == 48);
  CHECK(totient(97) == 96);
}

TEST_CASE("is_prime rejects Carmichael numbers") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(561));   // 3 * 11 * 17
  CHECK_FALSE(is_prime(1105));  // 5 * 13 * 17
}

TEST_CASE("q_int builds 1 + q + ... + q^{n-1}") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == IntPoly(1));
  CHECK(q_int(4) == ipoly({1, 1, 1, 1}));
  CHECK(eval_int(q_int(12), 5_mpz) == 61035156);  // (5^12 - 1) / 4, frozen
}

TEST_CASE("q_pochhammer matches the frozen degree-10 expansion") {
  CHECK(q_pochhammer(0) == IntPoly(1));
  CHECK(q_pochhammer(1) == ipoly({1, -1}));
  CHECK(q_pochhammer(2) == ipoly({1, -1, -1, 1}));
  // Frozen: (q;q)_10.
  CHECK(q_pochhammer(10) ==
        ipoly({1,  -1, -1, 0,  0,  1,  0,  1,  0,  0,  0,  1,  -1, -1,
               -1, -2, 0,  0,  1,  1,  1,  1,  3,  0,  0,  -1, -1, -2,
               -2, -1, -1, 0,  0,  3,  1,  1,  1,  1,  0,  0,  -2, -1,
               -1, -1, 1,  0,  0,  0,  1,  0,  1,  0,  0,  -1, -1, 1}));
}

TEST_CASE("gauss_binom boundary and frozen values") {
  CHECK(gauss_binom(5, -1).is_zero());
  CHECK(gauss_binom(5, 6).is_zero());
  CHECK(gauss_binom(0, 0) == IntPoly(1));
  CHECK(gauss_binom(7, 0) == IntPoly(1));
  CHECK(gauss_binom(7, 7) == IntPoly(1));
  CHECK(gauss_binom(4, 2) == ipoly({1, 1, 2, 1, 1}));
  // Frozen: [10 choose 4].
  CHECK(gauss_binom(10, 4) ==
        ipoly({1, 1, 2, 3, 5, 6, 9, 10, 13, 14, 16, 16, 18, 16, 16, 14, 13,
               10, 9, 6, 5, 3, 2, 1, 1}));
}

TEST_CASE("gauss_binom structure on a central column entry") {
  // Frozen spot checks on [30 choose 15]: degree, ends, interior, q -> 1.
  IntPoly g = gauss_binom(30, 15);
  CHECK(g.degree() == 225);
  CHECK(g[0] == 1);
  CHECK(g[1] == 1);
  CHECK(g[2] == 2);
  CHECK(g[100] == 2226739);
  CHECK(g[112] == 2527074);
  CHECK(g[225] == 1);
  mpz_class at1 = eval_int(g, 1_mpz);
  CHECK(at1 == mpz_class("155117520"));
  mpz_class bin;
  mpz_bin_uiui(bin.get_mpz_t(), 30, 15);
  CHECK(at1 == bin);
}

TEST_CASE("gauss_binom satisfies both Pascal recurrences") {
  for (long long n = 1; n <= 18; ++n) {
    for (long long k = 0; k <= n; ++k) {
      IntPoly lhs = gauss_binom(n, k);
      CHECK(lhs == gauss_binom(n - 1, k - 1) +
                       monomial_mul(gauss_binom(n - 1, k),
                                    static_cast<std::size_t>(k)));
      CHECK(lhs == monomial_mul(gauss_binom(n - 1, k - 1),
                                static_cast<std::size_t>(n - k)) +
                       gauss_binom(n - 1, k));
    }
  }
}

TEST_CASE("gauss_binom is palindromic and symmetric") {
  for (long long n = 0; n <= 16; ++n) {
    for (long long k = 0; k <= n; ++k) {
      IntPoly g = gauss_binom(n, k);
      CHECK(g == gauss_binom(n, n - k));
      CHECK(g.degree() == k * (n - k));
      const auto& c = g.coeffs();
      for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i] == c[c.size() - 1 - i]);
      }
    }
  }
}

TEST_CASE("gauss_binom factors as a Pochhammer ratio") {
  for (unsigned long n = 0; n <= 24; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      CHECK(gauss_binom(static_cast<long long>(n), static_cast<long long>(k)) *
                q_pochhammer(k) * q_pochhammer(n - k) ==
            q_pochhammer(n));
    }
  }
}

TEST_CASE("cyclotomic polynomials multiply back to q^n - 1") {
  CHECK(cyclotomic(1) == ipoly({-1, 1}));
  CHECK(cyclotomic(2) == ipoly({1, 1}));
  CHECK(cyclotomic(6) == ipoly({1, -1, 1}));
  CHECK(cyclotomic(12) == ipoly({1, 0, -1, 0, 1}));
  for (unsigned long n : {1ul, 2ul, 7ul, 12ul, 36ul, 100ul, 210ul}) {
    IntPoly prod(1);
    for (unsigned long d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    CHECK(prod == IntPoly::monomial(n) + IntPoly(-1));
  }
}

TEST_CASE("cyclotomic at prime and prime-power indices") {
  for (unsigned long p : {2ul, 3ul, 5ul, 11ul, 13ul}) {
    CHECK(cyclotomic(p) == q_int(p));
  }
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    // Phi_{p^2}(q) = Phi_p(q^p).
    IntPoly expect;
    {
      std::vector<mpz_class> v(p * (p - 1) + 1, 0);
      for (unsigned long i = 0; i < p; ++i) v[i * p] = 1;
      expect = IntPoly(std::move(v));
    }
    CHECK(cyclotomic(p * p) == expect);
  }
}

TEST_CASE("cyclotomic 105 has coefficients beyond unity") {
  // Frozen: Phi_105, the smallest index with a coefficient of magnitude 2.
  CHECK(cyclotomic(105) ==
        ipoly({1, 1, 1,  0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1, 1, 1,
               1, 0, 0,  -1, 0, -1, 0,  -1, 0,  -1, 0, -1, 0, 0, 1, 1, 1,
               1, 1, 1,  0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1}));
  CHECK(cyclotomic(105).degree() == static_cast<long>(totient(105)));
}

TEST_CASE("explicit cyclotomic cache matches the thread-local one") {
  CycloCache cache;
  CHECK(cyclotomic(30, cache) == cyclotomic(30));
  CHECK(cyclotomic(4, cache) == ipoly({1, 0, 1}));
  CHECK_THROWS_AS(cache.get(0), std::domain_error);
}

TEST_CASE("central column stream agrees with direct construction") {
  CentralQBinomial stream;
  CHECK(stream.index() == 0);
  CHECK(stream.value() == IntPoly(1));
  for (unsigned long k = 1; k <= 30; ++k) {
    stream.advance();
    CHECK(stream.index() == k);
    CHECK(stream.value() == gauss_binom(2 * static_cast<long long>(k),
                                        static_cast<long long>(k)));
  }
}

TEST_CASE("row scan walks a Gaussian row left to right") {
  for (unsigned long m : {0ul, 1ul, 9ul, 26ul}) {
    GaussRowScan scan(m);
    CHECK(scan.row() == m);
    for (unsigned long j = 0; j <= m; ++j) {
      CHECK(scan.col() == j);
      CHECK(scan.value() == gauss_binom(static_cast<long long>(m),
                                        static_cast<long long>(j)));
      scan.advance();
    }
    // Columns beyond the row are identically zero.
    CHECK(scan.value().is_zero());
    scan.advance();
    CHECK(scan.value().is_zero());
  }
}
