#include <algorithm>
#include <string>

#include "entif/constructors.hpp"
#include "entif/exact.hpp"

namespace entif {

FrameMatrix hadamard_entif(std::size_t dim, std::size_t order) {
  if (dim == 0) throw PreconditionError("hadamard_entif: dimension must be positive");
  if (dim > order) throw PreconditionError("hadamard_entif: dimension exceeds the Hadamard order");
  const FrameMatrix h = hadamard(order);
  std::vector<std::size_t> rows(dim);
  for (std::size_t i = 0; i < dim; ++i) rows[i] = i;
  return row_restrict(h, rows);
}

std::vector<std::pair<mpz_class, mpz_class>> five_power_reps(std::size_t n) {
  std::vector<std::pair<mpz_class, mpz_class>> reps;
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), 5, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    // 5^j (2 + i)^(2(n - j))
    mpz_class re = 1, im = 0;
    for (std::size_t t = 0; t < 2 * (n - j); ++t) {
      mpz_class nre = 2 * re - im;
      mpz_class nim = re + 2 * im;
      re = std::move(nre);
      im = std::move(nim);
    }
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 5, j);
    re = abs(re * f);
    im = abs(im * f);
    if (re < im) std::swap(re, im);
    if (im == 0 || re == im || re * re + im * im != target) {
      throw std::logic_error("Gaussian integer representation is degenerate");
    }
    reps.emplace_back(re, im);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return reps;
}

FrameMatrix entif_2d(std::size_t n) {
  if (n == 0) throw PreconditionError("entif_2d: n must be positive");
  const auto reps = five_power_reps(n);
  FrameMatrix out(2, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [a, b] = reps[i];
    out(0, 2 * i) = a;
    out(0, 2 * i + 1) = b;
    out(1, 2 * i) = b;
    out(1, 2 * i + 1) = -a;
  }
  return out;
}

FrameMatrix entif_3d(std::size_t n, ThreeDimFamily family) {
  if (n == 0) throw PreconditionError("entif_3d: n must be positive");
  if (family == ThreeDimFamily::kThree) return hadjoin_copies(FrameMatrix::identity(3), n);
  // Dropping the all-ones row leaves the regular tetrahedron.
  const std::size_t rows[] = {1, 2, 3};
  return hadjoin_copies(row_restrict(sylvester_hadamard(2), rows), n);
}

Dim5Blocks dim5_even_blocks(long a) {
  if (a == 0) throw PreconditionError("dim5_even_blocks: a must be nonzero");
  const long b = 2 * a;
  FrameMatrix eight{
      {a, a, a, a, a, a, a, a},
      {b, -b, 0, 0, 0, 0, 0, 0},
      {0, 0, b, -b, 0, 0, 0, 0},
      {0, 0, 0, 0, b, -b, 0, 0},
      {0, 0, 0, 0, 0, 0, b, -b},
  };
  FrameMatrix ten{
      {a, -b, 0, 0, 0, 0, 0, 0, a, -b},
      {b, a, a, -b, 0, 0, 0, 0, 0, 0},
      {0, 0, b, a, a, -b, 0, 0, 0, 0},
      {0, 0, 0, 0, b, a, a, -b, 0, 0},
      {0, 0, 0, 0, 0, 0, b, a, b, a},
  };
  return {std::move(eight), std::move(ten)};
}

std::size_t gensqr_dim(int family, std::size_t n) {
  const std::size_t n2 = n * n;
  switch (family) {
    case 1: return n2 + 1;
    case 2: return 2 * n2 + 1;
    case 3: return 3 * n2 + 1;
    case 4: return 4 * n2 + 1;
    case 5: return 4 * n2 + 2;
    default: throw PreconditionError("gensqr: family must be 1..5");
  }
}

std::size_t gensqr_count(int family, std::size_t n) {
  gensqr_dim(family, n);
  return (family <= 3 ? 4 : 8) * n * n;
}

std::uint64_t gensqr_norm_sq(int family, std::size_t n) {
  const std::uint64_t n2 = n * n;
  switch (family) {
    case 1: return n2 + 1;
    case 2: return 2 * n2 + 1;
    case 3: return 3 * n2 + 1;
    case 4: return 4 * n2 + 1;
    case 5: return 2 * (1 + 2 * n2);
    default: throw PreconditionError("gensqr: family must be 1..5");
  }
}

FrameMatrix gensqr(int family, std::size_t n, long b) {
  if (n == 0) throw PreconditionError("gensqr: n must be positive");
  if (b == 0) throw PreconditionError("gensqr: b must be nonzero");
  const std::size_t dim = gensqr_dim(family, n);
  const std::size_t count = gensqr_count(family, n);
  const std::size_t n2 = n * n;
  FrameMatrix out(dim, count);
  const mpz_class bb = b;

  // Rows below are 1-based as in the block description; r(x) converts.
  auto r = [](std::size_t one_based) { return one_based - 1; };

  if (family <= 3) {
    const mpz_class a = mpz_class(static_cast<unsigned long>(n)) * bb;
    const long first[4] = {1, 1, 1, -1};
    const long p1[4] = {1, 1, -1, 1};
    const long p2[4] = {1, -1, 1, 1};
    const long p3[4] = {-1, 1, 1, 1};
    for (std::size_t j = 1; j <= n2; ++j) {
      const std::size_t c0 = 4 * (j - 1);
      for (std::size_t t = 0; t < 4; ++t) {
        out(0, c0 + t) = first[t] * bb;
        if (family == 1) {
          out(r(j + 1), c0 + t) = p1[t] * a;
        } else if (family == 2) {
          out(r(2 * j), c0 + t) = p1[t] * a;
          out(r(2 * j + 1), c0 + t) = p2[t] * a;
        } else {
          out(r(3 * j - 1), c0 + t) = p1[t] * a;
          out(r(3 * j), c0 + t) = p2[t] * a;
          out(r(3 * j + 1), c0 + t) = p3[t] * a;
        }
      }
    }
  } else if (family == 4) {
    const mpz_class a = 2 * mpz_class(static_cast<unsigned long>(n)) * bb;
    for (std::size_t j = 1; j <= n2; ++j) {
      const std::size_t c0 = 8 * (j - 1);
      for (std::size_t t = 0; t < 8; ++t) out(0, c0 + t) = bb;
      for (std::size_t s = 0; s < 4; ++s) {
        const std::size_t row = r(4 * j - 2 + s);
        out(row, c0 + 2 * s) = a;
        out(row, c0 + 2 * s + 1) = -a;
      }
    }
  } else {
    const mpz_class a = 2 * mpz_class(static_cast<unsigned long>(n)) * bb;
    for (std::size_t j = 1; j <= 2 * n2; ++j) {
      const std::size_t c0 = 4 * (j - 1);
      const long second[4] = {1, -1, 1, -1};
      for (std::size_t t = 0; t < 4; ++t) {
        out(0, c0 + t) = bb;
        out(1, c0 + t) = second[t] * bb;
      }
      out(r(2 * j + 1), c0 + 0) = a;
      out(r(2 * j + 1), c0 + 2) = -a;
      out(r(2 * j + 2), c0 + 1) = a;
      out(r(2 * j + 2), c0 + 3) = -a;
    }
  }
  return out;
}

FrameMatrix equal_norm_any(std::size_t dim, std::size_t count) {
  if (dim == 0) throw PreconditionError("equal_norm_any: dimension must be positive");
  if (count < dim) throw PreconditionError("equal_norm_any: count must be at least the dimension");
  FrameMatrix out(dim, count);
  for (std::size_t j = 0; j < count; ++j) out(j % dim, j) = 1;
  return out;
}

FrameMatrix tight_any(std::size_t dim, std::size_t count, std::optional<mpz_class> p) {
  if (dim == 0) throw PreconditionError("tight_any: dimension must be positive");
  if (count < dim) throw PreconditionError("tight_any: count must be at least the dimension");

  const bool even = dim % 2 == 0;
  const std::size_t blocks = even ? (dim - 2) / 2 : (dim - 1) / 2;
  const std::size_t tail = even ? count - 2 * blocks - 1 : count - 2 * blocks;

  mpz_class root;
  std::vector<mpz_class> pair_parts;
  std::vector<mpz_class> tail_parts;
  if (p) {
    root = abs(*p);
    const mpz_class target = root * root;
    auto t = nonzero_square_decompose(target, static_cast<unsigned>(tail));
    if (!t) throw InfeasibleError("square-decomposition", "p^2 is not a sum of " + std::to_string(tail) + " nonzero squares");
    tail_parts = std::move(*t);
    if (blocks > 0) {
      auto two = nonzero_square_decompose(target, 2);
      if (!two) throw InfeasibleError("square-decomposition", "p^2 is not a sum of two nonzero squares");
      pair_parts = std::move(*two);
    }
  } else {
    const auto k = static_cast<unsigned>(std::max<std::size_t>(tail, blocks > 0 ? 2 : 1));
    const PythagoreanChain chain = pythagorean_chain(k);
    root = chain.s;
    tail_parts = chain.decompositions[tail - 1];
    if (blocks > 0) pair_parts = chain.decompositions[1];
  }
  std::sort(tail_parts.begin(), tail_parts.end());
  std::sort(pair_parts.begin(), pair_parts.end());

  FrameMatrix out(dim, count);
  for (std::size_t i = 0; i < blocks; ++i) {
    const mpz_class& a = pair_parts[0];
    const mpz_class& b = pair_parts[1];
    out(2 * i, 2 * i) = a;
    out(2 * i, 2 * i + 1) = b;
    out(2 * i + 1, 2 * i) = b;
    out(2 * i + 1, 2 * i + 1) = -a;
  }
  for (std::size_t t = 0; t < tail; ++t) out(2 * blocks, 2 * blocks + t) = tail_parts[t];
  if (even) out(dim - 1, count - 1) = root;
  return out;
}

}  // namespace entif
