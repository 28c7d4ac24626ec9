#pragma once

// Fixed-width integer kernels behind the exact fast path of frame_operator and
// gram. Inputs are int32, accumulation is int64; callers guarantee that
// length * max|x|^2 stays below 2^62 so no partial sum can overflow.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace entif::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  /// Sum of a[k] * b[k] for k < n.
  std::int64_t (*dot_i32)(const std::int32_t* a, const std::int32_t* b, std::size_t n);
  /// out[i * rows + j] = dot(row i, row j) for a row-major rows x cols block.
  void (*row_gram_i32)(const std::int32_t* data, std::size_t rows, std::size_t cols,
                       std::int64_t* out);
};

/// Portable reference implementation.
const KernelTable& scalar_kernels();

/// AVX2 implementation, or nullptr when it was not compiled in or the CPU
/// lacks AVX2.
const KernelTable* avx2_kernels();

/// Best available table. Set ENTIF_FORCE_SCALAR=1 in the environment to pin
/// the scalar variant.
const KernelTable& active_kernels();

}  // namespace entif::kernels
