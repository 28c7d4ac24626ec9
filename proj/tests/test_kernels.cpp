#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "entif/kernels.hpp"

using namespace entif::kernels;

namespace {

std::int64_t reference_dot(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> t{&scalar_kernels()};
  if (const KernelTable* avx = avx2_kernels()) t.push_back(avx);
  return t;
}

}  // namespace

TEST_CASE("dot kernels agree with the reference on every length and tail") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int32_t> dist(-50000, 50000);
  for (const KernelTable* k : tables()) {
    CAPTURE(isa_name(k->isa));
    for (std::size_t n = 0; n < 70; ++n) {
      std::vector<std::int32_t> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = dist(rng);
        b[i] = dist(rng);
      }
      CHECK(k->dot_i32(a.data(), b.data(), n) == reference_dot(a, b));
    }
  }
}

TEST_CASE("dot kernels handle extreme int32 values") {
  const std::int32_t lo = std::numeric_limits<std::int32_t>::min();
  const std::int32_t hi = std::numeric_limits<std::int32_t>::max();
  std::vector<std::int32_t> a{lo, hi, lo, hi, -1, 0, 1, lo, hi};
  std::vector<std::int32_t> b{hi, hi, lo, lo, lo, hi, hi, 1, -1};
  for (const KernelTable* k : tables()) {
    CAPTURE(isa_name(k->isa));
    // Each product fits in int64; a sum of several might not, so check them one at a time.
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(k->dot_i32(&a[i], &b[i], 1) == static_cast<std::int64_t>(a[i]) * b[i]);
    std::vector<std::int32_t> x{lo, hi, 3, -7, lo};
    std::vector<std::int32_t> y{-1, -1, 5, 2, 1};
    CHECK(k->dot_i32(x.data(), y.data(), x.size()) == reference_dot(x, y));
  }
}

TEST_CASE("row gram kernels agree across ISAs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int32_t> dist(-3000, 3000);
  const auto& scalar = scalar_kernels();
  for (std::size_t rows = 1; rows <= 6; ++rows)
    for (std::size_t cols : {1u, 3u, 4u, 7u, 8u, 9u, 16u, 33u}) {
      std::vector<std::int32_t> data(rows * cols);
      for (auto& x : data) x = dist(rng);
      std::vector<std::int64_t> expect(rows * rows), got(rows * rows);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) {
          std::int64_t s = 0;
          for (std::size_t c = 0; c < cols; ++c) s += static_cast<std::int64_t>(data[i * cols + c]) * data[j * cols + c];
          expect[i * rows + j] = s;
        }
      scalar.row_gram_i32(data.data(), rows, cols, got.data());
      CHECK(got == expect);
      if (const KernelTable* avx = avx2_kernels()) {
        std::vector<std::int64_t> v(rows * rows);
        avx->row_gram_i32(data.data(), rows, cols, v.data());
        CHECK(v == expect);
      }
    }
}

TEST_CASE("active table is one of the known variants") {
  const KernelTable& k = active_kernels();
  CHECK((k.isa == Isa::kScalar || k.isa == Isa::kAvx2));
  CHECK(isa_name(Isa::kScalar) == "scalar");
  CHECK(isa_name(Isa::kAvx2) == "avx2");
}
