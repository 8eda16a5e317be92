// Dense coefficient-vector multiplication kernels shared by the integer and
// rational polynomial types.  mul_dense dispatches between the serial
// schoolbook kernel and Karatsuba; Karatsuba forks OpenMP tasks near the top
// of the recursion when the operands are large.  All paths produce identical
// coefficient vectors.
#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qcong::detail {

// Below this operand length Karatsuba recursion bottoms out into schoolbook.
inline constexpr std::size_t kKaratsubaThreshold = 32;

// Minimum operand length before mul_dense forks OpenMP tasks.
inline constexpr std::size_t kParallelMulThreshold = 2048;

// out[i+j] += a[i] * b[j]; out must hold na + nb - 1 entries.
template <class T>
void schoolbook_accumulate(const T* a, std::size_t na, const T* b,
                           std::size_t nb, T* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    if constexpr (std::is_same_v<T, mpz_class>) {
      const mpz_srcptr ai = a[i].get_mpz_t();
      for (std::size_t j = 0; j < nb; ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
      }
    } else {
      for (std::size_t j = 0; j < nb; ++j) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
}

template <class T>
std::vector<T> mul_schoolbook_vec(const std::vector<T>& a,
                                  const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> out(a.size() + b.size() - 1);
  schoolbook_accumulate(a.data(), a.size(), b.data(), b.size(), out.data());
  return out;
}

// Karatsuba with both operands split at h = ceil(max(na, nb) / 2):
//   a*b = z0 + q^h * z1 + q^{2h} * z2,
//   z0 = a0*b0, z2 = a1*b1, z1 = (a0+a1)*(b0+b1) - z0 - z2.
// When the shorter operand fits below h its high half is empty and z2
// vanishes; the formula still holds.  Accumulates into out.
template <class T>
void kara_rec(const T* a, std::size_t na, const T* b, std::size_t nb, T* out,
              std::size_t threshold, int task_depth) {
  if (na == 0 || nb == 0) return;
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb <= threshold) {
    schoolbook_accumulate(a, na, b, nb, out);
    return;
  }
  const std::size_t h = (na + 1) / 2;
  const std::size_t na0 = h, na1 = na - h;
  const std::size_t nb0 = std::min(nb, h), nb1 = nb - nb0;

  std::vector<T> asum(na0), bsum(std::max(nb0, nb1));
  for (std::size_t i = 0; i < na0; ++i) asum[i] = a[i];
  for (std::size_t i = 0; i < na1; ++i) asum[i] += a[h + i];
  for (std::size_t i = 0; i < nb0; ++i) bsum[i] = b[i];
  for (std::size_t i = 0; i < nb1; ++i) bsum[i] += b[h + i];

  std::vector<T> z0(na0 + nb0 - 1);
  std::vector<T> z2(nb1 ? na1 + nb1 - 1 : 0);
  std::vector<T> z1(asum.size() + bsum.size() - 1);

#if defined(_OPENMP)
  if (task_depth > 0 && nb >= kParallelMulThreshold) {
#pragma omp task shared(z0)
    kara_rec(a, na0, b, nb0, z0.data(), threshold, task_depth - 1);
#pragma omp task shared(z2)
    if (nb1)
      kara_rec(a + h, na1, b + h, nb1, z2.data(), threshold, task_depth - 1);
    kara_rec(asum.data(), asum.size(), bsum.data(), bsum.size(), z1.data(),
             threshold, task_depth - 1);
#pragma omp taskwait
  } else
#endif
  {
    kara_rec(a, na0, b, nb0, z0.data(), threshold, 0);
    if (nb1) kara_rec(a + h, na1, b + h, nb1, z2.data(), threshold, 0);
    kara_rec(asum.data(), asum.size(), bsum.data(), bsum.size(), z1.data(),
             threshold, 0);
  }

  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  // In the unbalanced case z1's buffer can run one slot past deg(a*b); the
  // spill entries cancel to zero, so clamp to the true output length.
  const std::size_t z1len = std::min(z1.size(), na + nb - 1 - h);
  for (std::size_t i = 0; i < z1len; ++i) out[h + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] += z2[i];
}

template <class T>
std::vector<T> mul_karatsuba_vec(const std::vector<T>& a,
                                 const std::vector<T>& b,
                                 std::size_t threshold = kKaratsubaThreshold) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> out(a.size() + b.size() - 1);
#if defined(_OPENMP)
  if (std::min(a.size(), b.size()) >= kParallelMulThreshold &&
      !omp_in_parallel() && omp_get_max_threads() > 1) {
#pragma omp parallel
#pragma omp single
    kara_rec(a.data(), a.size(), b.data(), b.size(), out.data(), threshold, 3);
    return out;
  }
#endif
  kara_rec(a.data(), a.size(), b.data(), b.size(), out.data(), threshold, 0);
  return out;
}

template <class T>
std::vector<T> mul_dense(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kKaratsubaThreshold)
    return mul_schoolbook_vec(a, b);
  return mul_karatsuba_vec(a, b);
}

}  // namespace qcong::detail
