#include <cstdlib>
#include <string_view>

#include "entif/kernels.hpp"
#include "kernels/kernels_internal.hpp"

namespace entif::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::kScalar, &detail::dot_i32_scalar,
                                 &detail::row_gram_i32_scalar};
  return table;
}

const KernelTable* avx2_kernels() {
#if defined(ENTIF_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{Isa::kAvx2, &detail::dot_i32_avx2, &detail::row_gram_i32_avx2};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const char* force = std::getenv("ENTIF_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) != "0") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace entif::kernels
