#include <vector>

#include "entif/numtheory.hpp"

namespace entif {

namespace {

struct Triple {
  mpz_class a, b, c;
};

// Decomposition of c_j^2 into `parts` nonzero squares, using
// c_j^2 = a_j^2 + b_j^2 and b_j = c_{j-1}.
std::vector<mpz_class> unfold(const std::vector<Triple>& triples, std::size_t j, unsigned parts) {
  if (parts == 1) return {triples[j].c};
  if (parts == 2) return {triples[j].a, triples[j].b};
  std::vector<mpz_class> out{triples[j].a};
  auto tail = unfold(triples, j - 1, parts - 1);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

PythagoreanChain pythagorean_chain(unsigned k, std::uint64_t m0, std::uint64_t n0) {
  if (k == 0) throw PreconditionError("pythagorean_chain: k must be positive");
  if (m0 % 2 == 0 || n0 % 2 == 0 || m0 <= n0 || n0 == 0) {
    throw PreconditionError("pythagorean_chain: seed must be odd m0 > n0 >= 1");
  }

  const std::size_t steps = k <= 2 ? 1 : k - 1;
  std::vector<Triple> triples;
  mpz_class m = m0;
  mpz_class n = n0;
  for (std::size_t j = 0; j < steps; ++j) {
    triples.push_back({m * m - n * n, 2 * m * n, m * m + n * n});
    // c = m^2 + n^2 with m, n odd is 2 mod 8, so c / 2 is odd.
    m = triples.back().c / 2;
    n = 1;
  }

  PythagoreanChain out;
  out.k = k;
  out.s = triples.back().c;
  for (unsigned i = 1; i <= k; ++i) out.decompositions.push_back(unfold(triples, steps - 1, i));
  return out;
}

namespace {

bool square_dfs(const mpz_class& remaining, unsigned left, const mpz_class& max_part, std::vector<mpz_class>& parts) {
  if (left == 0) return remaining == 0;
  if (remaining < left) return false;
  if (left == 1) {
    if (!mpz_perfect_square_p(remaining.get_mpz_t())) return false;
    mpz_class r = sqrt(remaining);
    if (r > max_part || r == 0) return false;
    parts.push_back(r);
    return true;
  }
  mpz_class top = sqrt(remaining - (left - 1));
  if (top > max_part) top = max_part;
  for (mpz_class x = top; x >= 1; --x) {
    // The remaining left parts are each at most x.
    if (x * x * left < remaining) break;
    parts.push_back(x);
    if (square_dfs(remaining - x * x, left - 1, x, parts)) return true;
    parts.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<mpz_class>> nonzero_square_decompose(const mpz_class& target, unsigned parts) {
  if (parts == 0 || target <= 0) return std::nullopt;
  std::vector<mpz_class> out;
  if (!square_dfs(target, parts, sqrt(target), out)) return std::nullopt;
  return out;
}

}  // namespace entif
