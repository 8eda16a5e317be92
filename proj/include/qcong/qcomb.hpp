// q-combinatorics: q-integers, q-Pochhammer symbols, Gaussian binomial
// coefficients, cyclotomic polynomials, and streaming builders for the two
// binomial families the verifiers consume row by row.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qcong/intpoly.hpp"

namespace qcong {

// Legendre-type character mod 3: 1, -1, 0 for k = 1, 2, 0 (mod 3).
// Periodic over all integers, including negatives.
int chi3(long long k);

// Floor division for possibly negative numerators, positive divisors.
long long floor_div(long long a, long long b);

// Euler totient by trial division.
unsigned long totient(unsigned long n);

// Miller-Rabin via GMP; composite inputs never pass.
bool is_prime(unsigned long n);

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
IntPoly q_int(unsigned long n);

// (q;q)_n = prod_{i=1..n} (1 - q^i); (q;q)_0 = 1.
IntPoly q_pochhammer(unsigned long n);

// Gaussian binomial coefficient [n choose k]_q.  Zero outside 0 <= k <= n.
// Built by the Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]; small rows
// are memoized per thread, larger ones walked by ratio along the row.
IntPoly gauss_binom(long long n, long long k);

// Memo for cyclotomic polynomials.  Not thread-safe; each worker thread gets
// its own instance through cyclotomic().
class CycloCache {
 public:
  // Phi_n, computed as (q^n - 1) / prod_{d | n, d < n} Phi_d.
  const IntPoly& get(unsigned long n);

 private:
  std::map<unsigned long, IntPoly> memo_;
};

// Phi_n from an explicit cache.
const IntPoly& cyclotomic(unsigned long n, CycloCache& cache);

// Phi_n from a thread-local cache.
const IntPoly& cyclotomic(unsigned long n);

// Streams the central column [2k choose k]_q for k = 0, 1, 2, ... using
// [2k+2,k+1] = [2k,k] * (q^{2k+1}-1)(q^{2k+2}-1) / (q^{k+1}-1)^2.
// Each advance costs O(deg) per binomial factor instead of a fresh Pascal
// triangle; agreement with gauss_binom is pinned by tests.
class CentralQBinomial {
 public:
  CentralQBinomial() : value_(1) {}

  unsigned long index() const { return k_; }
  const IntPoly& value() const { return value_; }
  void advance();

 private:
  unsigned long k_ = 0;
  IntPoly value_;
};

// Walks one row of the Gaussian triangle left to right using
// [m,j+1] = [m,j] * (q^{m-j}-1) / (q^{j+1}-1).  Columns beyond m are zero.
class GaussRowScan {
 public:
  explicit GaussRowScan(unsigned long m) : m_(m), value_(1) {}

  unsigned long row() const { return m_; }
  unsigned long col() const { return j_; }
  const IntPoly& value() const { return value_; }
  void advance();

 private:
  unsigned long m_;
  unsigned long j_ = 0;
  IntPoly value_;
};

}  // namespace qcong
