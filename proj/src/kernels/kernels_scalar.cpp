#include "kernels/kernels_internal.hpp"

namespace entif::kernels::detail {

std::int64_t dot_i32_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += std::int64_t{a[k]} * std::int64_t{b[k]};
  return acc;
}

void row_gram_i32_scalar(const std::int32_t* data, std::size_t rows, std::size_t cols,
                         std::int64_t* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i; j < rows; ++j) {
      const std::int64_t v = dot_i32_scalar(data + i * cols, data + j * cols, cols);
      out[i * rows + j] = v;
      out[j * rows + i] = v;
    }
  }
}

}  // namespace entif::kernels::detail
