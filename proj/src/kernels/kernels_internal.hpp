#pragma once

#include <cstddef>
#include <cstdint>

namespace entif::kernels::detail {

std::int64_t dot_i32_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n);
void row_gram_i32_scalar(const std::int32_t* data, std::size_t rows, std::size_t cols,
                         std::int64_t* out);

#if defined(ENTIF_HAVE_AVX2_TU)
std::int64_t dot_i32_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n);
void row_gram_i32_avx2(const std::int32_t* data, std::size_t rows, std::size_t cols,
                       std::int64_t* out);
#endif

}  // namespace entif::kernels::detail
