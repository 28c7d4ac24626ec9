#include <algorithm>
#include <numeric>
#include <vector>

#include "entif/analysis.hpp"
#include "entif/exact.hpp"

namespace entif {

namespace {

// Advances `idx` to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool subset_dependent(const FrameMatrix& a, const std::vector<std::size_t>& cols) {
  const FrameMatrix sub = select_columns(a, cols);
  if (cols.size() == a.dim()) return bareiss_det(sub) == 0;
  return rank(sub) < cols.size();
}

}  // namespace

std::size_t spark(const FrameMatrix& a) {
  const std::size_t n = a.count();
  const std::size_t m = a.dim();
  const std::size_t max_k = std::min(n, m);
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      if (subset_dependent(a, idx)) return k;
    } while (next_combination(idx, n));
  }
  // Any m + 1 vectors in an m-dimensional space are dependent.
  return n > m ? m + 1 : n + 1;
}

}  // namespace entif
