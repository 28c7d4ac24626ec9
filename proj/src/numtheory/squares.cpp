#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entif/numtheory.hpp"

namespace entif {

std::uint64_t isqrt(std::uint64_t n) {
  // The double estimate can be off by one either way near 2^64; compare by
  // division so the corrections cannot overflow.
  auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))), 0xFFFFFFFFULL);
  while (r > 0 && r > n / r) --r;
  while (r < 0xFFFFFFFFULL && r + 1 <= n / (r + 1)) ++r;
  return r;
}

bool is_perfect_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

std::uint64_t count_two_square_reps(std::uint64_t n) {
  if (n == 0) throw PreconditionError("count_two_square_reps: n must be positive");
  std::uint64_t b_product = 1;
  std::uint64_t rest = n;
  while (rest % 2 == 0) rest /= 2;
  for (std::uint64_t p = 3; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (p % 4 == 3) {
      if (e % 2 == 1) return 0;
    } else {
      b_product *= e + 1;
    }
  }
  if (rest > 1) {
    if (rest % 4 == 3) return 0;
    b_product *= 2;
  }
  return b_product % 2 == 0 ? b_product / 2 : (b_product - 1) / 2;
}

TwoSquareRepSet two_square_reps(std::uint64_t n) {
  if (n == 0) throw PreconditionError("two_square_reps: n must be positive");
  TwoSquareRepSet out;
  out.n = n;
  // b < a forces 2 b^2 < n.
  for (std::uint64_t b = 1; 2 * b * b < n; ++b) {
    const std::uint64_t rest = n - b * b;
    const std::uint64_t a = isqrt(rest);
    if (a * a == rest && a > b) out.reps.push_back({a, b});
  }
  // b ascending means a descending already.
  out.predicted_count = count_two_square_reps(n);
  if (out.reps.size() != out.predicted_count) {
    throw std::logic_error("two-square search disagrees with the closed formula");
  }
  return out;
}

namespace {

bool odd_square_dfs(std::uint64_t remaining, unsigned left, std::uint64_t max_part,
                    std::vector<std::uint64_t>& parts) {
  if (left == 0) return remaining == 0;
  // Each odd square is 1 mod 8 and at least 1.
  if (remaining < left || (remaining - left) % 8 != 0) return false;
  std::uint64_t top = isqrt(remaining - (left - 1));
  if (top > max_part) top = max_part;
  if (top % 2 == 0) --top;
  for (std::uint64_t x = top; x >= 1; x -= 2) {
    parts.push_back(x);
    if (odd_square_dfs(remaining - x * x, left - 1, x, parts)) return true;
    parts.pop_back();
    if (x == 1) break;
  }
  return false;
}

}  // namespace

std::optional<OddSquareDecomposition> odd_square_decompose(std::uint64_t m, unsigned k) {
  if (m == 0 || k == 0) return std::nullopt;
  std::vector<std::uint64_t> parts;
  if (!odd_square_dfs(m, k, isqrt(m), parts)) return std::nullopt;
  return OddSquareDecomposition{m, k, std::move(parts)};
}

SimplexFeasibility simplex_feasible(std::uint64_t dim) {
  if (dim == 0) throw PreconditionError("simplex_feasible: dimension must be positive");
  for (unsigned k : {1u, 2u, 4u, 8u}) {
    if (auto d = odd_square_decompose(dim + 1, k)) return {true, std::move(d)};
  }
  return {false, std::nullopt};
}

}  // namespace entif
