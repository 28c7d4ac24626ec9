#include <stdexcept>
#include <string>

#include "entif/constructors.hpp"
#include "entif/exact.hpp"

namespace entif {

namespace {

// Orthogonal-scaled blocks: E^T E = (sum of squared parts) * I.
FrameMatrix e_block(const std::vector<std::uint64_t>& parts) {
  std::vector<mpz_class> p;
  for (auto x : parts) p.emplace_back(static_cast<unsigned long>(x));
  if (p.size() == 2) {
    const auto& a = p[0];
    const auto& b = p[1];
    return FrameMatrix{{a, -b}, {b, a}};
  }
  if (p.size() == 4) {
    const auto &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    return FrameMatrix{
        {a, b, c, d},
        {-b, a, -d, c},
        {-c, d, a, -b},
        {-d, -c, b, a},
    };
  }
  const auto &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4], &f = p[5], &g = p[6], &h = p[7];
  return FrameMatrix{
      {a, b, c, d, e, f, g, h},
      {-b, a, -d, c, -f, e, -h, g},
      {e, -f, g, -h, -a, b, -c, d},
      {-f, -e, h, g, b, a, -d, -c},
      {-d, -c, b, a, -h, -g, f, e},
      {c, -d, -a, b, -g, h, e, -f},
      {g, -h, -e, f, c, -d, -a, b},
      {-h, -g, -f, -e, d, c, b, a},
  };
}

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  RationalMatrix out(x.dim(), y.count());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t k = 0; k < x.count(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.count(); ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

void check_certificate(const SimplexCertificate& cert) {
  const std::size_t m = cert.m;
  const mpq_class inv_m = make_rational(1, static_cast<unsigned long>(m));
  const RationalMatrix sts = multiply(cert.s.transpose(), cert.s);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (sts(i, j) != (i == j ? inv_m : mpq_class(0))) throw std::logic_error("simplex: S^T S != I / m");
  for (std::size_t i = 0; i < m; ++i) {
    mpq_class row_sum = 0;
    for (std::size_t j = 0; j < m; ++j) row_sum += cert.s(i, j);
    if (row_sum != (i + 1 == m ? 1 : 0)) throw std::logic_error("simplex: S * ones != e_m");
  }
  for (std::size_t j = 0; j < m; ++j)
    if (cert.s(m - 1, j) != inv_m) throw std::logic_error("simplex: last row of S is not 1/m");
}

}  // namespace

SimplexResult simplex_entif(std::size_t dim) {
  if (dim == 0) throw PreconditionError("simplex_entif: dimension must be positive");
  const std::uint64_t m = dim + 1;
  const auto mz = static_cast<unsigned long>(m);

  SimplexCertificate cert;
  cert.m = m;
  cert.u = RationalMatrix(m, m);

  if (is_perfect_square(m)) {
    cert.simplex_case = SimplexCase::kPerfectSquare;
    const mpq_class inv_root = make_rational(1, static_cast<unsigned long>(isqrt(m)));
    for (std::size_t i = 0; i < m; ++i) cert.u(i, i) = inv_root;
  } else {
    std::optional<OddSquareDecomposition> found;
    for (unsigned k : {2u, 4u, 8u}) {
      if (m % k != 0) continue;
      found = odd_square_decompose(m, k);
      if (found) {
        cert.simplex_case = k == 2 ? SimplexCase::kTwo : k == 4 ? SimplexCase::kFour : SimplexCase::kEight;
        break;
      }
    }
    if (!found) {
      throw InfeasibleError("odd-square-simplex-criterion",
                            "no equal-norm tight integer frame with " + std::to_string(m) + " vectors in dimension " +
                                std::to_string(dim) + ": " + std::to_string(m) +
                                " is not a sum of 1, 2, 4 or 8 odd squares");
    }
    const FrameMatrix block = e_block(found->parts);
    const std::size_t k = found->k;
    for (std::size_t base = 0; base < m; base += k)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) cert.u(base + i, base + j) = make_rational(block(i, j), mz);
    cert.decomposition = std::move(found);
  }

  // w = U v - e_m, v = all ones.
  cert.w.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) cert.w[i] += cert.u(i, j);
  cert.w[m - 1] -= 1;

  mpq_class ww = 0;
  for (const auto& x : cert.w) ww += x * x;
  if (ww == 0) {
    cert.s = cert.u;
  } else {
    // R = I - 2 w w^T / <w, w>, applied as S = U - w (2 w^T U / <w, w>).
    std::vector<mpq_class> wtu(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (cert.w[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) wtu[j] += cert.w[i] * cert.u(i, j);
    }
    const mpq_class factor = 2 / ww;
    cert.s = cert.u;
    for (std::size_t i = 0; i < m; ++i) {
      if (cert.w[i] == 0) continue;
      const mpq_class wi = cert.w[i] * factor;
      for (std::size_t j = 0; j < m; ++j) cert.s(i, j) -= wi * wtu[j];
    }
  }
  check_certificate(cert);

  RationalMatrix top(dim, m);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < m; ++j) top(i, j) = cert.s(i, j);
  cert.result = clear_denominators(top);

  SimplexResult out;
  out.frame = cert.result.matrix;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace entif
