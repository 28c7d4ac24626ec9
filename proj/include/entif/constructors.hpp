#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "entif/matrix.hpp"
#include "entif/numtheory.hpp"

namespace entif {

// ---------------------------------------------------------------------------
// Combinators

/// Column concatenation [A, B]. An M x 0 (or 0 x 0) operand is the identity.
FrameMatrix hadjoin(const FrameMatrix& a, const FrameMatrix& b);

/// [A, A, ..., A] with `copies` blocks.
FrameMatrix hadjoin_copies(const FrameMatrix& a, std::size_t copies);

/// Block diagonal diag(A, B).
FrameMatrix diag_adjoin(const FrameMatrix& a, const FrameMatrix& b);

/// [[cA, cA], [cA, -cA]]. Throws PreconditionError for c == 0.
FrameMatrix double_frame(const FrameMatrix& a, const mpz_class& c);

// ---------------------------------------------------------------------------
// ENTIF families

/// First `dim` rows of the Hadamard matrix of the given order: tight with
/// lambda = order and column norm^2 = dim.
FrameMatrix hadamard_entif(std::size_t dim, std::size_t order);

/// 2 x 2n full-spark ENTIF built from the n representations of 5^(2n) as a
/// sum of two unequal nonzero squares, taken in decreasing-a order.
FrameMatrix entif_2d(std::size_t n);

/// The n representations used by entif_2d, obtained from the Gaussian integer
/// factorisation 5 = (2 + i)(2 - i).
std::vector<std::pair<mpz_class, mpz_class>> five_power_reps(std::size_t n);

enum class ThreeDimFamily { kThree = 3, kFour = 4 };

/// n copies of I_3 (3n columns) or of the last three rows of the Sylvester 4 x 4
/// Hadamard matrix, a regular tetrahedron (4n columns).
FrameMatrix entif_3d(std::size_t n, ThreeDimFamily family);

enum class SimplexCase { kPerfectSquare, kTwo, kFour, kEight };

/// Intermediate objects of the rational simplex construction on m = dim + 1
/// coordinates. S = R U satisfies S^T S = I / m and S * ones = e_m.
struct SimplexCertificate {
  std::uint64_t m = 0;
  SimplexCase simplex_case = SimplexCase::kPerfectSquare;
  std::optional<OddSquareDecomposition> decomposition;
  RationalMatrix u;
  std::vector<mpq_class> w;
  RationalMatrix s;
  ScaledFrame result;
};

struct SimplexResult {
  FrameMatrix frame;
  SimplexCertificate certificate;
};

/// dim x (dim + 1) equiangular ENTIF. Throws InfeasibleError when dim + 1 is
/// not a sum of 1, 2, 4 or 8 odd squares.
SimplexResult simplex_entif(std::size_t dim);

/// p copies of A then q copies of B where g * n == p * N_A + q * N_B. Both
/// inputs must be ENTIFs in the same dimension with the same column norm.
FrameMatrix gcd_adjoin(const FrameMatrix& a, const FrameMatrix& b, std::int64_t n);

/// The 5 x 8 and 5 x 10 ENTIFs with b = 2a, both of column norm^2 5a^2.
struct Dim5Blocks {
  FrameMatrix a;
  FrameMatrix b;
};
Dim5Blocks dim5_even_blocks(long a = 1);

/// Block families 1..5 in dimensions n^2+1, 2n^2+1, 3n^2+1, 4n^2+1, 4n^2+2.
FrameMatrix gensqr(int family, std::size_t n, long b = 1);

std::size_t gensqr_dim(int family, std::size_t n);
std::size_t gensqr_count(int family, std::size_t n);
/// Column norm^2 for b = 1.
std::uint64_t gensqr_norm_sq(int family, std::size_t n);

// ---------------------------------------------------------------------------
// Relaxations

/// [I_M ... I_M, first k columns of I_M] for count = c * dim + k.
FrameMatrix equal_norm_any(std::size_t dim, std::size_t count);

/// Block-diagonal tight frame with frame operator p^2 I. Without an explicit
/// p the value comes from pythagorean_chain; with one, the needed square
/// decompositions of p^2 are searched for and InfeasibleError is thrown if
/// they do not exist.
FrameMatrix tight_any(std::size_t dim, std::size_t count, std::optional<mpz_class> p = std::nullopt);

struct AlmostTightRequest {
  std::size_t dim = 0;
  std::size_t count = 0;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  /// Largest common denominator allowed for any rational unit vector.
  mpz_class denominator_budget = mpz_class(1000000000);
};

struct AlmostTightResult {
  FrameMatrix frame;
  /// Common denominator cleared; every column has norm^2 == scale^2.
  mpz_class scale;
  /// Frame bounds after normalising the columns to unit norm.
  double lower = 0.0;
  double upper = 0.0;
  double certified_error = 0.0;
  double delta = 0.0;
  double per_vector_tolerance = 0.0;
  mpz_class max_denominator;
};

/// Full-spark equal-norm integer frame whose normalised frame bounds lie in
/// [(1 - eps) N/M, (1 + eps) N/M].
AlmostTightResult almost_tight(const AlmostTightRequest& req);

}  // namespace entif
