#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "entif/matrix.hpp"

namespace entif {

/// Exact verdict on an integer synthesis matrix.
///
/// `eigen_diagonal` is the diagonal of A * A^T; it is the list of frame
/// operator eigenvalues only when `rows_orthogonal` holds. `tight_value` is
/// the positive lambda with A * A^T == lambda * I. `angle_value` is the common
/// off-diagonal Gram entry when the columns are signed-equiangular, otherwise
/// the common modulus when only modulus-equiangular.
struct FrameReport {
  std::size_t dim = 0;
  std::size_t count = 0;
  std::size_t rank = 0;
  bool is_frame = false;
  bool rows_orthogonal = false;
  std::vector<mpz_class> eigen_diagonal;
  bool is_tight = false;
  std::optional<mpz_class> tight_value;
  std::vector<mpz_class> column_norms_sq;
  bool is_equal_norm = false;
  std::optional<mpz_class> equal_norm_sq;
  bool is_equiangular_signed = false;
  bool is_equiangular_modulus = false;
  std::optional<mpz_class> angle_value;
  std::optional<std::size_t> spark;

  /// Equal-norm tight integer frame with nonzero columns.
  bool is_entif() const {
    return is_frame && is_tight && is_equal_norm && equal_norm_sq && *equal_norm_sq > 0;
  }

  friend bool operator==(const FrameReport&, const FrameReport&) = default;
};

FrameReport analyze(const FrameMatrix& a, bool with_spark = false);

/// Size of the smallest linearly dependent column subset, or count + 1 when
/// the columns are independent. A zero column gives 1.
std::size_t spark(const FrameMatrix& a);

struct ParityCount {
  std::size_t evens = 0;
  std::size_t odds = 0;
  friend bool operator==(const ParityCount&, const ParityCount&) = default;
};

struct ParityProfile {
  std::vector<ParityCount> rows;
  std::vector<ParityCount> columns;
};

ParityProfile parity_profile(const FrameMatrix& a);

ParityCount parity_of(std::span<const mpz_class> values);

/// For lists with equal square sums, returns (#odd in a) - (#odd in b), which
/// is always a multiple of 4. Throws PreconditionError on unequal square sums.
long parity_obstruction_check(std::span<const mpz_class> a, std::span<const mpz_class> b);

/// Extreme eigenvalues of A * A^T in floating point. Each estimate carries an
/// error bound from its eigenpair residual plus the rounding of the input;
/// CertificationError is thrown if a bound exceeds rel_tol * |estimate|.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  double lower_error = 0.0;
  double upper_error = 0.0;
};

FrameBounds frame_bounds_numeric(const FrameMatrix& a, double rel_tol);

/// Exhaustive search for ENTIFs of shape dim x count with entries in
/// [-max_entry, max_entry]. Matrices are enumerated up to column order and
/// column sign, both of which preserve the ENTIF property, so `found` holds one
/// representative per class.
struct BoundedSearchResult {
  std::size_t column_classes = 0;
  std::size_t multisets_examined = 0;
  std::vector<FrameMatrix> found;
};

BoundedSearchResult search_bounded_entifs(std::size_t dim, std::size_t count, int max_entry);

}  // namespace entif
