#include "qcong/qcomb.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qcong {

int chi3(long long k) {
  switch (((k % 3) + 3) % 3) {
    case 1:
      return 1;
    case 2:
      return -1;
    default:
      return 0;
  }
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

unsigned long totient(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  mpz_class z = static_cast<unsigned long>(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

IntPoly q_int(unsigned long n) {
  if (n == 0) return {};
  return IntPoly(std::vector<mpz_class>(n, 1));
}

IntPoly q_pochhammer(unsigned long n) {
  IntPoly p(1);
  for (unsigned long i = 1; i <= n; ++i) {
    p = mul_qpow_minus_one(p, i);
    p = -p;  // (1 - q^i) = -(q^i - 1)
  }
  return p;
}

namespace {

// Full Pascal rows are memoized up to this row index per thread; above it
// gauss_binom falls back to a ratio walk along the row.
constexpr unsigned long kGaussMemoMaxRow = 64;

const std::vector<IntPoly>& pascal_row(unsigned long n) {
  thread_local std::vector<std::vector<IntPoly>> rows{{IntPoly(1)}};
  while (rows.size() <= n) {
    const std::vector<IntPoly>& prev = rows.back();
    const unsigned long m = rows.size();
    std::vector<IntPoly> cur(m + 1);
    cur[0] = IntPoly(1);
    cur[m] = IntPoly(1);
    for (unsigned long k = 1; k < m; ++k) {
      // [m,k] = [m-1,k-1] + q^k [m-1,k]
      cur[k] = prev[k - 1] + monomial_mul(prev[k], k);
    }
    rows.push_back(std::move(cur));
  }
  return rows[n];
}

}  // namespace

IntPoly gauss_binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (static_cast<unsigned long>(n) <= kGaussMemoMaxRow) {
    return pascal_row(static_cast<unsigned long>(n))[static_cast<std::size_t>(
        k)];
  }
  GaussRowScan scan(static_cast<unsigned long>(n));
  while (scan.col() < static_cast<unsigned long>(k)) scan.advance();
  return scan.value();
}

const IntPoly& CycloCache::get(unsigned long n) {
  if (n == 0) throw std::domain_error("Phi_0 is undefined");
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  IntPoly p = IntPoly::monomial(n) - IntPoly(1);  // q^n - 1
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d == 0) p = divexact(p, get(d));
  }
  return memo_.emplace(n, std::move(p)).first->second;
}

const IntPoly& cyclotomic(unsigned long n, CycloCache& cache) {
  return cache.get(n);
}

const IntPoly& cyclotomic(unsigned long n) {
  thread_local CycloCache cache;
  return cache.get(n);
}

void CentralQBinomial::advance() {
  value_ = mul_qpow_minus_one(value_, 2 * k_ + 1);
  value_ = mul_qpow_minus_one(value_, 2 * k_ + 2);
  value_ = divexact_qpow_minus_one(value_, k_ + 1);
  value_ = divexact_qpow_minus_one(value_, k_ + 1);
  ++k_;
}

void GaussRowScan::advance() {
  if (j_ >= m_) {
    value_ = IntPoly();
    ++j_;
    return;
  }
  value_ = mul_qpow_minus_one(value_, m_ - j_);
  value_ = divexact_qpow_minus_one(value_, j_ + 1);
  ++j_;
}

}  // namespace qcong
