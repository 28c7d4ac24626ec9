#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "entif/matrix.hpp"

namespace entif {

// ---------------------------------------------------------------------------
// Sums of two squares

struct TwoSquareRep {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const TwoSquareRep&, const TwoSquareRep&) = default;
};

/// Representations n = a^2 + b^2 with a > b >= 1, found by exhaustive search,
/// alongside the count predicted from the prime factorization of n.
struct TwoSquareRepSet {
  std::uint64_t n = 0;
  std::vector<TwoSquareRep> reps;  // decreasing a
  std::uint64_t predicted_count = 0;
};

/// Throws std::logic_error if the search and the closed formula disagree.
TwoSquareRepSet two_square_reps(std::uint64_t n);

/// Closed-form count of representations as a sum of two unequal nonzero
/// squares, ignoring order. Zero when some prime 3 mod 4 has odd exponent;
/// otherwise B/2 or (B-1)/2 with B the product of (e+1) over primes 1 mod 4.
std::uint64_t count_two_square_reps(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

// ---------------------------------------------------------------------------
// Odd-square decompositions and the integer simplex criterion

struct OddSquareDecomposition {
  std::uint64_t m = 0;
  unsigned k = 0;
  std::vector<std::uint64_t> parts;  // non-increasing odd positive integers
};

/// First decomposition of m into k odd squares in non-increasing
/// lexicographic order (largest parts first), if any.
std::optional<OddSquareDecomposition> odd_square_decompose(std::uint64_t m, unsigned k);

struct SimplexFeasibility {
  bool feasible = false;
  std::optional<OddSquareDecomposition> witness;
};

/// Integer regular simplex test on dim + 1: tries k = 1, 2, 4, 8 in order.
SimplexFeasibility simplex_feasible(std::uint64_t dim);

// ---------------------------------------------------------------------------
// Pythagorean chains

/// `decompositions[i - 1]` writes s^2 as a sum of i nonzero squares.
struct PythagoreanChain {
  unsigned k = 0;
  mpz_class s;
  std::vector<std::vector<mpz_class>> decompositions;
};

/// Iterated Euclid triples starting from odd m0 > n0 >= 1. Each step reuses
/// the previous hypotenuse c = 2 * m' (m' odd) as the even leg of the next
/// triple generated by (m', 1).
PythagoreanChain pythagorean_chain(unsigned k, std::uint64_t m0 = 3, std::uint64_t n0 = 1);

/// Depth-first search for `target` as a sum of exactly `parts` nonzero
/// squares, parts non-increasing. Intended for small targets.
std::optional<std::vector<mpz_class>> nonzero_square_decompose(const mpz_class& target, unsigned parts);

// ---------------------------------------------------------------------------
// Frobenius coin problem

/// g * m == p * a + q * b with 0 <= q < a / g, g = gcd(a, b).
struct CoinRep {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t g = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
};

/// Unique representation with q < a / g. Below the (a/g - 1)(b/g - 1) bound
/// a representation is still returned when one exists; otherwise
/// InfeasibleError.
CoinRep coin_representation(std::int64_t a, std::int64_t b, std::int64_t m);

// ---------------------------------------------------------------------------
// Hadamard matrices

bool is_prime(std::uint64_t n);

/// Orders reachable from {1, 2, q + 1 (q prime, q = 3 mod 4)} by doubling.
bool hadamard_constructible(std::size_t order);

/// Sylvester matrix of order 2^k.
FrameMatrix sylvester_hadamard(unsigned k);

/// Paley type I matrix of order q + 1 for a prime q = 3 mod 4.
FrameMatrix paley_hadamard(std::uint64_t q);

/// Hadamard matrix of the given order, verified H^T H == order * I before it
/// is returned. Powers of two use Sylvester's construction; other orders use
/// the largest Paley core and then double. Throws UnsupportedOrderError.
FrameMatrix hadamard(std::size_t order);

}  // namespace entif
