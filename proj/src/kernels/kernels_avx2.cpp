#include "kernels/kernels_internal.hpp"

#if defined(ENTIF_HAVE_AVX2_TU)

#include <immintrin.h>

namespace entif::kernels::detail {

namespace {

inline std::int64_t hsum_epi64(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

}  // namespace

// _mm256_mul_epi32 multiplies the signed low halves of each 64-bit lane, so the
// even int32 lanes are handled directly and the odd lanes after a 32-bit shift.
std::int64_t dot_i32_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  __m256i acc_even = _mm256_setzero_si256();
  __m256i acc_odd = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epi32(va, vb));
    acc_odd = _mm256_add_epi64(
        acc_odd, _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
  }
  std::int64_t acc = hsum_epi64(_mm256_add_epi64(acc_even, acc_odd));
  for (; k < n; ++k) acc += std::int64_t{a[k]} * std::int64_t{b[k]};
  return acc;
}

void row_gram_i32_avx2(const std::int32_t* data, std::size_t rows, std::size_t cols,
                       std::int64_t* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i; j < rows; ++j) {
      const std::int64_t v = dot_i32_avx2(data + i * cols, data + j * cols, cols);
      out[i * rows + j] = v;
      out[j * rows + i] = v;
    }
  }
}

}  // namespace entif::kernels::detail

#endif
