#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entif/matrix.hpp"

namespace entif {

struct RecipePart;

/// Executable description of an ENTIF construction.
///
/// kBase names a constructor (`kind`) with integer parameters; kScale
/// multiplies its single child by `factor`; kAdjoin concatenates children
/// column-wise, each repeated `copies` times; kLift places `copies` copies of
/// its single child block-diagonally.
struct Recipe {
  enum class Op { kBase, kScale, kAdjoin, kLift };

  Op op = Op::kBase;
  std::string kind;
  std::vector<std::pair<std::string, long long>> params;
  mpz_class factor = 1;
  std::vector<RecipePart> parts;

  static Recipe base(std::string kind, std::vector<std::pair<std::string, long long>> params);
  static Recipe scale(Recipe child, mpz_class factor);
  static Recipe adjoin(std::vector<RecipePart> parts);
  static Recipe lift(Recipe child, std::size_t copies);

  std::string to_string() const;
  FrameMatrix execute() const;
};

struct RecipePart {
  Recipe recipe;
  std::size_t copies = 1;
};

enum class Feasibility { kExists, kImpossible, kUnknown };

std::string to_string(Feasibility f);

struct FeasibilityVerdict {
  std::size_t dim = 0;
  std::size_t count = 0;
  Feasibility status = Feasibility::kUnknown;
  std::optional<Recipe> witness;
  /// Stable identifier of the rule that decided the verdict.
  std::string citation;
  std::string explanation;
};

/// Citation identifiers. The first three are the only ones that can accompany
/// kImpossible.
namespace citations {
inline constexpr const char* kOddCount2d = "odd-count-2d-obstruction";
inline constexpr const char* kNoFive3d = "no-five-element-3d";
inline constexpr const char* kSimplexCriterion = "odd-square-simplex-criterion";
inline constexpr const char* kTwoSquare2d = "two-square-2d-family";
inline constexpr const char* kThreeDim = "three-dim-multiples";
inline constexpr const char* kHadamardTruncation = "hadamard-truncation";
inline constexpr const char* kBlockSquares = "block-square-families";
inline constexpr const char* kDim5Gcd = "dim5-gcd-adjoin";
inline constexpr const char* kGcdClosure = "gcd-closure";
inline constexpr const char* kNone = "none";
}  // namespace citations

/// Existence oracle for dim x count ENTIFs. Rules are applied in a fixed
/// order with nonexistence first; the first match decides.
FeasibilityVerdict entif_feasible(std::size_t dim, std::size_t count);

// ---------------------------------------------------------------------------
// Parity constraints for 3-row ENTIFs

struct Big3dimSolution {
  std::int64_t m1 = 0, m2 = 0, m3 = 0, k = 0;
  friend bool operator==(const Big3dimSolution&, const Big3dimSolution&) = default;
};

/// For a 3 x (2n + 1) ENTIF with gcd(2n + 1, 3) == 1 each column has one odd
/// entry and row i has 4 m_i + k odd entries. Returns every (m1, m2, m3, k)
/// with 4 (m1 + m2 + m3) + 3k == 2n + 1, 0 <= k < 4, and at least two row
/// counts 4 m_i + k <= n. An empty result rules the shape out.
struct Big3dimSolutionSet {
  std::int64_t n = 0;
  std::vector<Big3dimSolution> solutions;
};

Big3dimSolutionSet big3dim_solutions(std::int64_t n);

enum class ColumnParity { kTwoEvenOneOdd, kOneEvenTwoOdd };

/// Row odd counts of a 3 x (4n + 2) ENTIF with uniform column parity: each
/// row has 4 m_i + residue odd entries and m1 + m2 + m3 == m_sum.
struct RowOddForm {
  std::int64_t residue = 0;
  std::int64_t m_sum = 0;
};

RowOddForm check_4n2_parity(std::int64_t n, ColumnParity parity);

}  // namespace entif
