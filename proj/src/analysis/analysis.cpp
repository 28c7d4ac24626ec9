#include "entif/analysis.hpp"

#include <stdexcept>

#include "entif/exact.hpp"

namespace entif {

FrameReport analyze(const FrameMatrix& a, bool with_spark) {
  FrameReport r;
  r.dim = a.dim();
  r.count = a.count();
  r.rank = rank(a);
  r.is_frame = r.dim > 0 && r.rank == r.dim;

  const FrameMatrix s = frame_operator(a);
  r.rows_orthogonal = true;
  for (std::size_t i = 0; i < r.dim; ++i) {
    r.eigen_diagonal.push_back(s(i, i));
    for (std::size_t j = 0; j < r.dim; ++j)
      if (i != j && s(i, j) != 0) r.rows_orthogonal = false;
  }
  if (r.dim > 0 && r.rows_orthogonal && s(0, 0) > 0) {
    bool same = true;
    for (const auto& lambda : r.eigen_diagonal) same = same && lambda == s(0, 0);
    if (same) {
      r.is_tight = true;
      r.tight_value = s(0, 0);
    }
  }

  const FrameMatrix g = gram(a);
  for (std::size_t j = 0; j < r.count; ++j) r.column_norms_sq.push_back(g(j, j));
  r.is_equal_norm = true;
  for (const auto& n : r.column_norms_sq) r.is_equal_norm = r.is_equal_norm && n == r.column_norms_sq.front();
  if (r.is_equal_norm && r.count > 0) r.equal_norm_sq = r.column_norms_sq.front();

  std::optional<mpz_class> first;
  bool signed_eq = true;
  bool modulus_eq = true;
  for (std::size_t i = 0; i < r.count; ++i) {
    for (std::size_t j = i + 1; j < r.count; ++j) {
      if (!first) {
        first = g(i, j);
        continue;
      }
      if (g(i, j) != *first) signed_eq = false;
      if (abs(g(i, j)) != abs(*first)) modulus_eq = false;
    }
  }
  r.is_equiangular_signed = signed_eq;
  r.is_equiangular_modulus = modulus_eq;
  if (first) {
    if (signed_eq) r.angle_value = *first;
    else if (modulus_eq) r.angle_value = abs(*first);
  }

  if (with_spark) r.spark = spark(a);
  return r;
}

ParityCount parity_of(std::span<const mpz_class> values) {
  ParityCount p;
  for (const auto& v : values) {
    if (mpz_odd_p(v.get_mpz_t())) ++p.odds;
    else ++p.evens;
  }
  return p;
}

ParityProfile parity_profile(const FrameMatrix& a) {
  ParityProfile out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.rows.push_back(parity_of(a.row(i)));
  for (std::size_t j = 0; j < a.count(); ++j) {
    const auto col = a.column(j);
    out.columns.push_back(parity_of(col));
  }
  return out;
}

long parity_obstruction_check(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  mpz_class sa = 0;
  mpz_class sb = 0;
  for (const auto& x : a) sa += x * x;
  for (const auto& x : b) sb += x * x;
  if (sa != sb) throw PreconditionError("parity_obstruction_check: square sums differ");
  const long diff = static_cast<long>(parity_of(a).odds) - static_cast<long>(parity_of(b).odds);
  if (diff % 4 != 0) throw std::logic_error("odd-count difference not divisible by 4");
  return diff;
}

}  // namespace entif
