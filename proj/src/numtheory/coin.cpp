#include <numeric>

#include "entif/numtheory.hpp"

namespace entif {

namespace {

// Inverse of x modulo mod (mod >= 1, gcd(x, mod) == 1).
std::int64_t inverse_mod(std::int64_t x, std::int64_t mod) {
  std::int64_t old_r = x % mod, r = mod;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return ((old_s % mod) + mod) % mod;
}

}  // namespace

CoinRep coin_representation(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (a <= 0 || b <= 0) throw PreconditionError("coin_representation: a and b must be positive");
  const std::int64_t g = std::gcd(a, b);
  const std::int64_t a1 = a / g;
  const std::int64_t b1 = b / g;
  // m = p * a1 + q * b1 with q in [0, a1): q is fixed modulo a1.
  const std::int64_t q = a1 == 1 ? 0 : (((m % a1) + a1) % a1) * inverse_mod(b1 % a1, a1) % a1;
  const std::int64_t rest = m - q * b1;
  if (rest < 0) {
    throw InfeasibleError("coin-problem-bound", "no nonnegative representation of " + std::to_string(g * m) + " by " +
                                                    std::to_string(a) + " and " + std::to_string(b));
  }
  return {a, b, g, m, rest / a1, q};
}

}  // namespace entif
