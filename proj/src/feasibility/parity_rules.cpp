#include <numeric>
#include <stdexcept>
#include <string>

#include "entif/errors.hpp"
#include "entif/feasibility.hpp"

namespace entif {

Big3dimSolutionSet big3dim_solutions(std::int64_t n) {
  if (n < 2) throw PreconditionError("big3dim_solutions: n must be at least 2");
  if (std::gcd(2 * n + 1, std::int64_t{3}) != 1) {
    throw PreconditionError("big3dim_solutions: 2n + 1 = " + std::to_string(2 * n + 1) + " is divisible by 3");
  }
  Big3dimSolutionSet out;
  out.n = n;
  const std::int64_t total = 2 * n + 1;
  for (std::int64_t k = 0; k < 4; ++k) {
    const std::int64_t rest = total - 3 * k;
    if (rest < 0 || rest % 4 != 0) continue;
    const std::int64_t m = rest / 4;
    // Derived equivalences: k = 1 iff n = 2m + 1, k = 3 iff n = 2(m + 2).
    if ((k == 1) != (n == 2 * m + 1) || (k == 3) != (n == 2 * (m + 2))) {
      throw std::logic_error("big3dim_solutions: parity equivalence violated");
    }
    for (std::int64_t m1 = 0; m1 <= m; ++m1)
      for (std::int64_t m2 = 0; m1 + m2 <= m; ++m2) {
        const std::int64_t m3 = m - m1 - m2;
        const int small = (4 * m1 + k <= n) + (4 * m2 + k <= n) + (4 * m3 + k <= n);
        if (small >= 2) out.solutions.push_back({m1, m2, m3, k});
      }
  }
  return out;
}

RowOddForm check_4n2_parity(std::int64_t n, ColumnParity parity) {
  if (n < 2) throw PreconditionError("check_4n2_parity: n must be at least 2");
  if (std::gcd(4 * n + 2, std::int64_t{3}) != 1) {
    throw PreconditionError("check_4n2_parity: 4n + 2 = " + std::to_string(4 * n + 2) + " is divisible by 3");
  }
  // Odd entries total (4n + 2) per odd entry of a column; every row count
  // shares one residue mod 4.
  if (parity == ColumnParity::kTwoEvenOneOdd) return {2, n - 1};
  return {0, 2 * n + 1};
}

}  // namespace entif
