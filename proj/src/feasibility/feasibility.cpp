#include <algorithm>
#include <map>
#include <string>

#include "entif/analysis.hpp"
#include "entif/constructors.hpp"
#include "entif/feasibility.hpp"
#include "entif/numtheory.hpp"

namespace entif {

namespace {

// A catalog ENTIF in a fixed dimension: its column count and norm^2.
struct Witness {
  Recipe recipe;
  std::size_t count = 0;
  mpz_class norm_sq;
  bool hadamard = false;
};

mpz_class column_norm_sq(const FrameMatrix& a) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, 0) * a(i, 0);
  return s;
}

// Base witnesses in dimension `dim` with at most `max_count` columns,
// including block-diagonal lifts of witnesses from proper divisors of dim.
std::vector<Witness> catalog(std::size_t dim, std::size_t max_count) {
  std::vector<Witness> out;
  const auto add = [&](Recipe r, std::size_t count, mpz_class norm_sq, bool had = false) {
    if (count <= max_count) out.push_back({std::move(r), count, std::move(norm_sq), had});
  };
  const auto d = static_cast<long long>(dim);

  add(Recipe::base("identity", {{"dim", d}}), dim, 1);
  if (dim + 1 <= max_count && simplex_feasible(dim).feasible) {
    add(Recipe::base("simplex", {{"dim", d}}), dim + 1, column_norm_sq(simplex_entif(dim).frame));
  }
  if (dim == 2) {
    add(Recipe::base("two-dim", {{"n", 1}}), 2, 25);
  }
  for (std::size_t h = std::max<std::size_t>(dim, 2); h <= max_count; ++h) {
    if (h > 2 && h % 4 != 0) continue;
    if (!hadamard_constructible(h)) continue;
    add(Recipe::base("hadamard-truncate", {{"dim", d}, {"order", static_cast<long long>(h)}}), h,
        static_cast<unsigned long>(dim), true);
  }
  for (int family = 1; family <= 5; ++family)
    for (std::size_t n = 1; gensqr_dim(family, n) <= dim; ++n) {
      if (gensqr_dim(family, n) != dim) continue;
      add(Recipe::base("gensqr", {{"family", family}, {"n", static_cast<long long>(n)}, {"b", 1}}),
          gensqr_count(family, n), static_cast<unsigned long>(gensqr_norm_sq(family, n)));
    }
  if (dim == 5) {
    add(Recipe::base("dim5-even", {{"a", 1}, {"block", 8}}), 8, 5);
    add(Recipe::base("dim5-even", {{"a", 1}, {"block", 10}}), 10, 5);
  }
  for (std::size_t sub = 2; sub < dim; ++sub) {
    if (dim % sub != 0) continue;
    const std::size_t copies = dim / sub;
    for (auto& w : catalog(sub, max_count / copies)) {
      if (w.recipe.op == Recipe::Op::kBase && w.recipe.kind == "identity") continue;
      add(Recipe::lift(std::move(w.recipe), copies), w.count * copies, std::move(w.norm_sq));
    }
  }
  return out;
}

// Witnesses whose norms differ by a rational square can be scaled to a
// common norm; group them by that relation.
std::vector<std::vector<const Witness*>> norm_classes(const std::vector<Witness>& ws) {
  std::vector<std::vector<const Witness*>> classes;
  for (const auto& w : ws) {
    bool placed = false;
    for (auto& cls : classes) {
      const mpz_class prod = cls.front()->norm_sq * w.norm_sq;
      if (mpz_perfect_square_p(prod.get_mpz_t())) {
        cls.push_back(&w);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({&w});
  }
  return classes;
}

// Unbounded coin DP: a multiset of witnesses whose counts sum to `target`.
std::optional<Recipe> combine(const std::vector<const Witness*>& cls, std::size_t target) {
  std::vector<int> choice(target + 1, -1);
  std::vector<bool> reach(target + 1, false);
  reach[0] = true;
  for (std::size_t n = 1; n <= target; ++n)
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const std::size_t c = cls[i]->count;
      if (c <= n && reach[n - c]) {
        reach[n] = true;
        choice[n] = static_cast<int>(i);
        break;
      }
    }
  if (!reach[target]) return std::nullopt;

  std::map<int, std::size_t> used;
  for (std::size_t n = target; n > 0; n -= cls[static_cast<std::size_t>(choice[n])]->count) ++used[choice[n]];
  mpz_class common = 1;
  for (const auto& [i, copies] : used) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), cls[static_cast<std::size_t>(i)]->norm_sq.get_mpz_t());

  std::vector<RecipePart> parts;
  for (const auto& [i, copies] : used) {
    const Witness& w = *cls[static_cast<std::size_t>(i)];
    const mpz_class ratio = common / w.norm_sq;
    mpz_class factor;
    mpz_sqrt(factor.get_mpz_t(), ratio.get_mpz_t());
    if (factor * factor != ratio) throw std::logic_error("feasibility: norms are not square-compatible");
    parts.push_back({Recipe::scale(w.recipe, factor), copies});
  }
  return Recipe::adjoin(std::move(parts));
}

FeasibilityVerdict verdict(std::size_t dim, std::size_t count, Feasibility status, const char* citation,
                           std::string explanation, std::optional<Recipe> witness = std::nullopt) {
  FeasibilityVerdict v;
  v.dim = dim;
  v.count = count;
  v.status = status;
  v.citation = citation;
  v.explanation = std::move(explanation);
  v.witness = std::move(witness);
  return v;
}

std::string shape(std::size_t dim, std::size_t count) {
  return std::to_string(dim) + " x " + std::to_string(count);
}

}  // namespace

FeasibilityVerdict entif_feasible(std::size_t dim, std::size_t count) {
  if (dim == 0 || count < dim) throw PreconditionError("entif_feasible: need count >= dim >= 1");
  const auto d = static_cast<long long>(dim);
  const auto n = static_cast<long long>(count);

  // Nonexistence first.
  if (dim == 2 && count % 2 == 1) {
    return verdict(dim, count, Feasibility::kImpossible, citations::kOddCount2d,
                   "no ENTIF with an odd number of vectors exists in dimension 2");
  }
  if (dim == 3 && count == 5) {
    return verdict(dim, count, Feasibility::kImpossible, citations::kNoFive3d,
                   "the column-parity equations for 3 x 5 have no solution");
  }
  if (count == dim + 1) {
    const SimplexFeasibility s = simplex_feasible(dim);
    if (!s.feasible) {
      return verdict(dim, count, Feasibility::kImpossible, citations::kSimplexCriterion,
                     std::to_string(count) + " is not a sum of 1, 2, 4 or 8 odd squares");
    }
    return verdict(dim, count, Feasibility::kExists, citations::kSimplexCriterion,
                   std::to_string(count) + " is a sum of " + std::to_string(s.witness->k) + " odd squares",
                   Recipe::base("simplex", {{"dim", d}}));
  }

  if (dim == 2) {
    return verdict(dim, count, Feasibility::kExists, citations::kTwoSquare2d,
                   "representations of 5^N as sums of two squares",
                   Recipe::base("two-dim", {{"n", n / 2}}));
  }
  if (dim == 3 && (count % 3 == 0 || count % 4 == 0)) {
    const long long family = count % 3 == 0 ? 3 : 4;
    return verdict(dim, count, Feasibility::kExists, citations::kThreeDim,
                   "copies of I_3 or of the truncated 4 x 4 Hadamard matrix",
                   Recipe::base("three-dim", {{"n", n / family}, {"family", family}}));
  }

  const std::vector<Witness> all = catalog(dim, count);

  std::vector<const Witness*> hadamards;
  for (const auto& w : all)
    if (w.hadamard) hadamards.push_back(&w);
  if (!hadamards.empty()) {
    if (auto r = combine(hadamards, count)) {
      return verdict(dim, count, Feasibility::kExists, citations::kHadamardTruncation,
                     "column-adjoined truncated Hadamard matrices", std::move(r));
    }
  }

  for (int family = 1; family <= 5; ++family)
    for (std::size_t k = 1; gensqr_dim(family, k) <= dim; ++k) {
      if (gensqr_dim(family, k) != dim || count % gensqr_count(family, k) != 0) continue;
      Recipe base = Recipe::base("gensqr", {{"family", family}, {"n", static_cast<long long>(k)}, {"b", 1}});
      return verdict(dim, count, Feasibility::kExists, citations::kBlockSquares,
                     "block family " + std::to_string(family) + " with n = " + std::to_string(k),
                     Recipe::adjoin({{std::move(base), count / gensqr_count(family, k)}}));
    }

  if (dim == 5 && count % 2 == 0 && count >= 24) {
    return verdict(dim, count, Feasibility::kExists, citations::kDim5Gcd,
                   "gcd adjoin of the 5 x 8 and 5 x 10 blocks", Recipe::base("gcd-adjoin-dim5", {{"a", 1}, {"n", n / 2}}));
  }

  for (const auto& cls : norm_classes(all)) {
    if (auto r = combine(cls, count)) {
      return verdict(dim, count, Feasibility::kExists, citations::kGcdClosure,
                     "column-adjoined catalog ENTIFs scaled to a common norm", std::move(r));
    }
  }

  return verdict(dim, count, Feasibility::kUnknown, citations::kNone,
                 "no implemented construction or obstruction applies to " + shape(dim, count));
}

}  // namespace entif
