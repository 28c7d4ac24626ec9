#include <optional>
#include <string>

#include "entif/exact.hpp"
#include "entif/numtheory.hpp"

namespace entif {

namespace {

std::int64_t legendre(std::int64_t x, std::uint64_t p) {
  const auto r = static_cast<std::uint64_t>(((x % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                            static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  // Euler's criterion.
  mpz_class base = static_cast<unsigned long>(r), out;
  const mpz_class mod = static_cast<unsigned long>(p);
  mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
  return out == 1 ? 1 : -1;
}

bool is_paley_order(std::size_t t) {
  return t >= 4 && is_prime(t - 1) && (t - 1) % 4 == 3;
}

FrameMatrix sylvester_double(const FrameMatrix& h) {
  const std::size_t n = h.dim();
  FrameMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = h(i, j);
      out(i, j + n) = h(i, j);
      out(i + n, j) = h(i, j);
      out(i + n, j + n) = -h(i, j);
    }
  }
  return out;
}

bool is_hadamard(const FrameMatrix& h) {
  const FrameMatrix g = gram(h);
  const mpz_class n = static_cast<unsigned long>(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (g(i, j) != (i == j ? n : mpz_class(0))) return false;
  return true;
}

// Core order t (1, 2 or a Paley order) and the number of doublings, with the
// largest core preferred. Powers of two use the pure Sylvester chain.
std::optional<std::pair<std::size_t, unsigned>> decompose_order(std::size_t order) {
  if (order == 0) return std::nullopt;
  if ((order & (order - 1)) == 0) {
    unsigned k = 0;
    while ((std::size_t{1} << k) < order) ++k;
    return std::pair{std::size_t{1}, k};
  }
  std::size_t t = order;
  unsigned k = 0;
  while (true) {
    if (is_paley_order(t)) return std::pair{t, k};
    if (t % 2 != 0) return std::nullopt;
    t /= 2;
    ++k;
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool hadamard_constructible(std::size_t order) { return decompose_order(order).has_value(); }

FrameMatrix sylvester_hadamard(unsigned k) {
  FrameMatrix h{{1}};
  for (unsigned i = 0; i < k; ++i) h = sylvester_double(h);
  return h;
}

FrameMatrix paley_hadamard(std::uint64_t q) {
  if (!is_prime(q) || q % 4 != 3) throw UnsupportedOrderError("Paley I needs a prime q = 3 mod 4, got " + std::to_string(q));
  const std::size_t n = q + 1;
  // H = I + S with S = [[0, 1^T], [-1, Q]] skew-symmetric and S S^T = q I.
  FrameMatrix h(n, n);
  for (std::size_t j = 1; j < n; ++j) {
    h(0, j) = 1;
    h(j, 0) = -1;
  }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      h(i + 1, j + 1) = legendre(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), q);
  for (std::size_t i = 0; i < n; ++i) h(i, i) += 1;
  return h;
}

FrameMatrix hadamard(std::size_t order) {
  const auto parts = decompose_order(order);
  if (!parts) {
    throw UnsupportedOrderError("no implemented construction reaches Hadamard order " + std::to_string(order));
  }
  const auto [core, doublings] = *parts;
  FrameMatrix h = core == 1 ? FrameMatrix{{1}} : paley_hadamard(core - 1);
  for (unsigned i = 0; i < doublings; ++i) h = sylvester_double(h);
  if (!is_hadamard(h)) throw std::logic_error("constructed matrix failed H^T H == n I");
  return h;
}

}  // namespace entif
