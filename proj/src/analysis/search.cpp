#include <cstdint>
#include <map>
#include <vector>

#include "entif/analysis.hpp"

namespace entif {

namespace {

using Vec = std::vector<std::int64_t>;

struct SearchState {
  std::size_t dim;
  std::size_t count;
  std::int64_t lambda;
  const std::vector<Vec>* pool;
  std::vector<std::size_t> chosen;
  // Upper triangle of the partial frame operator, row-major dim x dim.
  std::vector<std::int64_t> acc;
  BoundedSearchResult* out;
};

void add_outer(SearchState& st, const Vec& v, std::int64_t sign) {
  for (std::size_t i = 0; i < st.dim; ++i)
    for (std::size_t j = i; j < st.dim; ++j) st.acc[i * st.dim + j] += sign * v[i] * v[j];
}

bool is_scaled_identity(const SearchState& st) {
  for (std::size_t i = 0; i < st.dim; ++i)
    for (std::size_t j = i; j < st.dim; ++j)
      if (st.acc[i * st.dim + j] != (i == j ? st.lambda : 0)) return false;
  return true;
}

void descend(SearchState& st, std::size_t start) {
  if (st.chosen.size() == st.count) {
    ++st.out->multisets_examined;
    if (is_scaled_identity(st)) {
      FrameMatrix m(st.dim, st.count);
      for (std::size_t j = 0; j < st.count; ++j)
        for (std::size_t i = 0; i < st.dim; ++i) m(i, j) = static_cast<long>((*st.pool)[st.chosen[j]][i]);
      st.out->found.push_back(std::move(m));
    }
    return;
  }
  for (std::size_t k = start; k < st.pool->size(); ++k) {
    const Vec& v = (*st.pool)[k];
    add_outer(st, v, 1);
    bool feasible = true;
    for (std::size_t i = 0; i < st.dim; ++i)
      if (st.acc[i * st.dim + i] > st.lambda) feasible = false;
    if (feasible) {
      st.chosen.push_back(k);
      descend(st, k);
      st.chosen.pop_back();
    }
    add_outer(st, v, -1);
  }
}

}  // namespace

BoundedSearchResult search_bounded_entifs(std::size_t dim, std::size_t count, int max_entry) {
  BoundedSearchResult result;
  if (dim == 0 || count == 0 || max_entry <= 0) return result;

  // Canonical representatives up to sign: first nonzero coordinate positive.
  std::map<std::int64_t, std::vector<Vec>> by_norm;
  Vec v(dim, -max_entry);
  while (true) {
    std::size_t lead = 0;
    while (lead < dim && v[lead] == 0) ++lead;
    if (lead < dim && v[lead] > 0) {
      std::int64_t norm = 0;
      for (auto x : v) norm += x * x;
      by_norm[norm].push_back(v);
    }
    std::size_t i = 0;
    while (i < dim && v[i] == max_entry) v[i++] = -max_entry;
    if (i == dim) break;
    ++v[i];
  }

  for (const auto& [norm, pool] : by_norm) {
    ++result.column_classes;
    const auto trace = static_cast<std::int64_t>(count) * norm;
    if (trace % static_cast<std::int64_t>(dim) != 0) continue;
    SearchState st{dim, count, trace / static_cast<std::int64_t>(dim), &pool, {}, std::vector<std::int64_t>(dim * dim, 0), &result};
    descend(st, 0);
  }
  return result;
}

}  // namespace entif
