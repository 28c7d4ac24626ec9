#include <numeric>
#include <string>

#include "entif/analysis.hpp"
#include "entif/constructors.hpp"

namespace entif {

FrameMatrix hadjoin(const FrameMatrix& a, const FrameMatrix& b) {
  if (b.count() == 0 && (b.dim() == a.dim() || b.dim() == 0)) return a;
  if (a.count() == 0 && (a.dim() == b.dim() || a.dim() == 0)) return b;
  if (a.dim() != b.dim()) throw DimensionError("hadjoin: row counts differ");
  FrameMatrix out(a.dim(), a.count() + b.count());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.count(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.count(); ++j) out(i, a.count() + j) = b(i, j);
  }
  return out;
}

FrameMatrix hadjoin_copies(const FrameMatrix& a, std::size_t copies) {
  FrameMatrix out(a.dim(), a.count() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.count(); ++j) out(i, c * a.count() + j) = a(i, j);
  return out;
}

FrameMatrix diag_adjoin(const FrameMatrix& a, const FrameMatrix& b) {
  FrameMatrix out(a.dim() + b.dim(), a.count() + b.count());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.count(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.count(); ++j) out(a.dim() + i, a.count() + j) = b(i, j);
  return out;
}

FrameMatrix double_frame(const FrameMatrix& a, const mpz_class& c) {
  if (c == 0) throw PreconditionError("double_frame: c must be nonzero");
  const std::size_t m = a.dim();
  const std::size_t n = a.count();
  FrameMatrix out(2 * m, 2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpz_class v = c * a(i, j);
      out(i, j) = v;
      out(i, j + n) = v;
      out(i + m, j) = v;
      out(i + m, j + n) = -v;
    }
  }
  return out;
}

FrameMatrix gcd_adjoin(const FrameMatrix& a, const FrameMatrix& b, std::int64_t n) {
  if (a.dim() != b.dim()) throw DimensionError("gcd_adjoin: frames live in different dimensions");
  const FrameReport ra = analyze(a);
  const FrameReport rb = analyze(b);
  if (!ra.is_entif() || !rb.is_entif()) throw PreconditionError("gcd_adjoin: both inputs must be ENTIFs");
  if (*ra.equal_norm_sq != *rb.equal_norm_sq) throw PreconditionError("gcd_adjoin: column norms differ");

  const auto na = static_cast<std::int64_t>(a.count());
  const auto nb = static_cast<std::int64_t>(b.count());
  const CoinRep rep = coin_representation(na, nb, n);
  return hadjoin(hadjoin_copies(a, static_cast<std::size_t>(rep.p)), hadjoin_copies(b, static_cast<std::size_t>(rep.q)));
}

}  // namespace entif
