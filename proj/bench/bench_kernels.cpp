// Timing harness for the two kernel choices that matter at scale: dense
// multiplication (schoolbook vs Karatsuba dispatch) and congruence reduction
// (eager fold through (q^n-1)^e vs direct long division).  Results must
// agree exactly; the point of the run is the timing table.
#include <chrono>
#include <climits>
#include <cstdio>
#include <random>

#include "qcong/congruence.hpp"
#include "qcong/intpoly.hpp"
#include "qcong/qcomb.hpp"

namespace {

qcong::IntPoly random_poly(std::mt19937_64& rng, std::size_t nterms) {
  std::uniform_int_distribution<long> coeff(-999, 999);
  std::vector<mpz_class> c(nterms);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return qcong::IntPoly(std::move(c));
}

template <class F>
long long best_ms(F&& f, int reps) {
  long long best = LLONG_MAX;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (dt < best) best = dt;
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 rng(42);
  std::printf("dense multiplication, n x n terms, best of 3:\n");
  for (std::size_t n : {256u, 1024u, 4096u}) {
    qcong::IntPoly a = random_poly(rng, n);
    qcong::IntPoly b = random_poly(rng, n);
    qcong::IntPoly out_school, out_kara;
    const long long school =
        best_ms([&] { out_school = mul_schoolbook(a, b); }, 3);
    const long long kara = best_ms([&] { out_kara = a * b; }, 3);
    if (out_school != out_kara) {
      std::printf("MISMATCH at n=%zu\n", n);
      return 1;
    }
    std::printf("  n=%5zu  schoolbook %6lld ms   karatsuba %6lld ms\n", n,
                school, kara);
  }

  std::printf("reduction mod Phi_n^2 of sum q^k [2k,k], k < n, best of 3:\n");
  for (unsigned long n : {20ul, 40ul}) {
    qcong::IntPoly sum = qcong::sum_central_qbinom(n);
    qcong::IntPoly rem_fold, rem_direct;
    const long long fold = best_ms(
        [&] { rem_fold = qcong::detail::remainder_mod_phi_pow(sum, n, 2); },
        3);
    const qcong::IntPoly modulus =
        qcong::pow(qcong::cyclotomic(n), 2);
    const long long direct = best_ms(
        [&] { rem_direct = qcong::divrem_monic(sum, modulus).rem; }, 3);
    if (rem_fold != rem_direct) {
      std::printf("MISMATCH at n=%lu\n", n);
      return 1;
    }
    std::printf("  n=%3lu (deg %ld)  fold %6lld ms   direct %6lld ms\n", n,
                sum.degree(), fold, direct);
  }
  return 0;
}
