#include "entif/exact.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "entif/kernels.hpp"

namespace entif {

namespace {

// Row-major int32 copy of `a`, or nullopt when the int64 kernels could
// overflow on rows of length `a.count()`.
std::optional<std::vector<std::int32_t>> narrow_for_kernels(const FrameMatrix& a) {
  mpz_class max_abs = 0;
  for (const auto& x : a.data()) {
    if (!x.fits_sint_p()) return std::nullopt;
    const mpz_class m = abs(x);
    if (m > max_abs) max_abs = m;
  }
  if (max_abs > std::numeric_limits<std::int32_t>::max()) return std::nullopt;
  const mpz_class worst = max_abs * max_abs * mpz_class(static_cast<unsigned long>(a.count()));
  const mpz_class limit = mpz_class(1) << 62;
  if (worst >= limit) return std::nullopt;

  std::vector<std::int32_t> out;
  out.reserve(a.data().size());
  for (const auto& x : a.data()) out.push_back(static_cast<std::int32_t>(x.get_si()));
  return out;
}

FrameMatrix row_products(const FrameMatrix& a) {
  const std::size_t n = a.dim();
  FrameMatrix out(n, n);
  if (n == 0) return out;

  if (auto narrow = narrow_for_kernels(a)) {
    std::vector<std::int64_t> buf(n * n);
    kernels::active_kernels().row_gram_i32(narrow->data(), n, a.count(), buf.data());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // mpz_class has no int64 constructor on every platform; go through long.
        out(i, j) = static_cast<long>(buf[i * n + j]);
      }
    return out;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      mpz_class acc = 0;
      const auto ri = a.row(i);
      const auto rj = a.row(j);
      for (std::size_t k = 0; k < a.count(); ++k) mpz_addmul(acc.get_mpz_t(), ri[k].get_mpz_t(), rj[k].get_mpz_t());
      out(i, j) = acc;
      out(j, i) = acc;
    }
  }
  return out;
}

}  // namespace

mpz_class bareiss_det(const FrameMatrix& square) {
  if (!square.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = square.dim();
  if (n == 0) return 1;

  FrameMatrix m = square;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const FrameMatrix& a) {
  FrameMatrix m = a;
  const std::size_t rows = m.dim();
  const std::size_t cols = m.count();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

FrameMatrix frame_operator(const FrameMatrix& a) { return row_products(a); }

FrameMatrix gram(const FrameMatrix& a) { return row_products(a.transpose()); }

ScaledFrame clear_denominators(const RationalMatrix& r) {
  mpz_class scale = 1;
  for (const auto& q : r.data()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());

  FrameMatrix out(r.dim(), r.count());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.count(); ++j) {
      const mpq_class& q = r(i, j);
      mpz_class v = scale / q.get_den();
      out(i, j) = v * q.get_num();
    }
  }
  return {std::move(out), std::move(scale)};
}

FrameMatrix row_restrict(const FrameMatrix& a, std::span<const std::size_t> rows) {
  if (rows.empty()) throw IndexError("row_restrict: empty row set");
  FrameMatrix out(rows.size(), a.count());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] >= a.dim()) throw IndexError("row_restrict: row index out of range");
    for (std::size_t j = 0; j < a.count(); ++j) out(r, j) = a(rows[r], j);
  }
  return out;
}

FrameMatrix select_columns(const FrameMatrix& a, std::span<const std::size_t> cols) {
  FrameMatrix out(a.dim(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] >= a.count()) throw IndexError("select_columns: column index out of range");
    for (std::size_t i = 0; i < a.dim(); ++i) out(i, c) = a(i, cols[c]);
  }
  return out;
}

FrameMatrix scaled(const FrameMatrix& a, const mpz_class& factor) {
  FrameMatrix out(a.dim(), a.count());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.count(); ++j) out(i, j) = a(i, j) * factor;
  return out;
}

}  // namespace entif
