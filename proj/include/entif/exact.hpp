#pragma once

#include <cstddef>
#include <span>

#include "entif/matrix.hpp"

namespace entif {

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws DimensionError for non-square input.
mpz_class bareiss_det(const FrameMatrix& square);

/// Exact rank by fraction-free elimination.
std::size_t rank(const FrameMatrix& a);

/// A * A^T. Entry (i, j) is the inner product of rows i and j.
FrameMatrix frame_operator(const FrameMatrix& a);

/// A^T * A. Entry (i, j) is the inner product of columns i and j.
FrameMatrix gram(const FrameMatrix& a);

/// Multiplies every entry by the LCM of the denominators. No further
/// reduction is applied to the integer result.
ScaledFrame clear_denominators(const RationalMatrix& r);

/// Submatrix on the given (0-based) rows, column order preserved.
FrameMatrix row_restrict(const FrameMatrix& a, std::span<const std::size_t> rows);

/// Submatrix on the given (0-based) columns.
FrameMatrix select_columns(const FrameMatrix& a, std::span<const std::size_t> cols);

/// Entrywise multiple.
FrameMatrix scaled(const FrameMatrix& a, const mpz_class& factor);

}  // namespace entif
