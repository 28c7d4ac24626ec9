#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "entif/analysis.hpp"
#include "entif/constructors.hpp"
#include "entif/exact.hpp"

namespace entif {

namespace {

// Real harmonic unit-norm tight frame with bound count / dim (count > dim).
Eigen::MatrixXd harmonic_frame(std::size_t dim, std::size_t count) {
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(count));
  const double md = static_cast<double>(dim);
  const double amp = std::sqrt(2.0 / md);
  for (std::size_t j = 0; j < count; ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    Eigen::Index row = 0;
    if (dim % 2 == 1) psi(row++, col) = 1.0 / std::sqrt(md);
    for (std::size_t k = 1; row < static_cast<Eigen::Index>(dim); ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k % count) / static_cast<double>(count);
      psi(row++, col) = amp * std::cos(angle);
      psi(row++, col) = amp * std::sin(angle);
    }
  }
  return psi;
}

// Seeded orthogonal matrix; uniform entries come straight from the engine bits
// so the result does not depend on the standard library's distributions.
Eigen::MatrixXd seeded_rotation(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ();
}

struct RationalUnit {
  std::vector<mpz_class> numer;  // primitive with the denominator
  mpz_class denom;
};

// Inverse stereographic image of p / q, projecting from the pole opposite
// to the target's last coordinate.
RationalUnit lift(const std::vector<long>& p, long q, int sign) {
  const std::size_t dim = p.size() + 1;
  mpz_class pp = 0;
  for (long x : p) pp += mpz_class(x) * x;
  const mpz_class qq = mpz_class(q) * q;
  RationalUnit u;
  u.numer.resize(dim);
  for (std::size_t k = 0; k + 1 < dim; ++k) u.numer[k] = 2 * mpz_class(p[k]) * q;
  u.numer[dim - 1] = sign * (qq - pp);
  u.denom = qq + pp;
  mpz_class g = u.denom;
  for (const auto& x : u.numer) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (auto& x : u.numer) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(u.denom.get_mpz_t(), u.denom.get_mpz_t(), g.get_mpz_t());
  return u;
}

double distance(const RationalUnit& u, const Eigen::VectorXd& target) {
  double acc = 0.0;
  for (std::size_t k = 0; k < u.numer.size(); ++k) {
    const double d = mpq_class(u.numer[k], u.denom).get_d() - target(static_cast<Eigen::Index>(k));
    acc += d * d;
  }
  return std::sqrt(acc);
}

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

// True when `v` lies outside every hyperplane spanned by dim - 1 accepted
// vectors, or, while fewer than dim are accepted, is independent of them.
bool avoids_hyperplanes(const std::vector<std::vector<mpz_class>>& accepted, const std::vector<mpz_class>& v) {
  const std::size_t dim = v.size();
  auto assemble = [&](const std::vector<std::size_t>& pick) {
    FrameMatrix m(dim, pick.size() + 1);
    for (std::size_t c = 0; c < pick.size(); ++c)
      for (std::size_t i = 0; i < dim; ++i) m(i, c) = accepted[pick[c]][i];
    for (std::size_t i = 0; i < dim; ++i) m(i, pick.size()) = v[i];
    return m;
  };
  if (accepted.size() < dim) {
    std::vector<std::size_t> all(accepted.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return rank(assemble(all)) == accepted.size() + 1;
  }
  std::vector<std::size_t> idx(dim - 1);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  do {
    if (bareiss_det(assemble(idx)) == 0) return false;
  } while (!idx.empty() && next_combination(idx, accepted.size()));
  return true;
}

RationalUnit approximate(const Eigen::VectorXd& psi, double tol, const mpz_class& budget,
                         const std::vector<std::vector<mpz_class>>& accepted, std::size_t index) {
  const auto dim = static_cast<std::size_t>(psi.size());
  const double last = psi(psi.size() - 1);
  const int sign = last >= 0.0 ? 1 : -1;
  std::vector<double> t(dim - 1);
  for (std::size_t k = 0; k + 1 < dim; ++k) t[k] = psi(static_cast<Eigen::Index>(k)) / (1.0 + sign * last);

  for (long q = 1;; ++q) {
    const mpz_class qq = mpz_class(q) * q;
    if (qq > budget) break;
    std::vector<long> base(dim - 1);
    for (std::size_t k = 0; k + 1 < dim; ++k) base[k] = std::lround(t[k] * static_cast<double>(q));

    std::vector<std::vector<long>> candidates{base};
    for (std::size_t k = 0; k + 1 < dim; ++k)
      for (long step : {1L, -1L}) {
        auto c = base;
        c[k] += step;
        candidates.push_back(std::move(c));
      }
    for (const auto& p : candidates) {
      RationalUnit u = lift(p, q, sign);
      if (u.denom > budget) continue;
      if (distance(u, psi) > tol) continue;
      if (!avoids_hyperplanes(accepted, u.numer)) continue;
      return u;
    }
  }
  throw BudgetError("almost_tight: no admissible rational point for vector " + std::to_string(index) +
                    " within the denominator budget");
}

}  // namespace

AlmostTightResult almost_tight(const AlmostTightRequest& req) {
  const std::size_t dim = req.dim;
  const std::size_t count = req.count;
  if (dim == 0 || count < dim) throw PreconditionError("almost_tight: need count >= dim >= 1");
  if (!(req.epsilon > 0.0 && req.epsilon < 1.0)) throw PreconditionError("almost_tight: epsilon must lie in (0, 1)");

  AlmostTightResult out;
  const double ratio = static_cast<double>(count) / static_cast<double>(dim);
  out.delta = std::min(std::sqrt(1.0 + req.epsilon) - 1.0, 1.0 - std::sqrt(1.0 - req.epsilon));
  // sum_i |f_i - psi_i|^2 <= delta^2 N / M keeps the synthesis perturbation
  // below delta * sqrt(N / M); this is never looser than delta * sqrt(N) / M.
  out.per_vector_tolerance = out.delta / std::sqrt(static_cast<double>(dim));

  std::vector<RationalUnit> units;
  if (count == dim) {
    for (std::size_t j = 0; j < dim; ++j) {
      RationalUnit u;
      u.numer.assign(dim, 0);
      u.numer[j] = 1;
      u.denom = 1;
      units.push_back(std::move(u));
    }
  } else {
    const Eigen::MatrixXd psi = seeded_rotation(dim, req.seed) * harmonic_frame(dim, count);
    std::vector<std::vector<mpz_class>> accepted;
    for (std::size_t j = 0; j < count; ++j) {
      Eigen::VectorXd target = psi.col(static_cast<Eigen::Index>(j));
      target.normalize();
      RationalUnit u = approximate(target, out.per_vector_tolerance, req.denominator_budget, accepted, j);
      accepted.push_back(u.numer);
      units.push_back(std::move(u));
    }
  }

  out.scale = 1;
  out.max_denominator = 1;
  for (const auto& u : units) {
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), u.denom.get_mpz_t());
    if (u.denom > out.max_denominator) out.max_denominator = u.denom;
  }
  out.frame = FrameMatrix(dim, count);
  for (std::size_t j = 0; j < count; ++j) {
    const mpz_class mult = out.scale / units[j].denom;
    for (std::size_t i = 0; i < dim; ++i) out.frame(i, j) = units[j].numer[i] * mult;
  }

  const FrameReport report = analyze(out.frame, /*with_spark=*/true);
  if (!report.is_equal_norm || *report.equal_norm_sq != out.scale * out.scale) {
    throw std::logic_error("almost_tight: columns lost equal norm");
  }
  if (report.spark != dim + 1) throw std::logic_error("almost_tight: result is not full spark");
  const FrameBounds bounds = frame_bounds_numeric(out.frame, 1e-9);
  const double norm_sq = mpz_class(out.scale * out.scale).get_d();
  out.lower = bounds.lower / norm_sq;
  out.upper = bounds.upper / norm_sq;
  out.certified_error = std::max(bounds.lower_error, bounds.upper_error) / norm_sq;
  if (out.lower < (1.0 - req.epsilon) * ratio - out.certified_error ||
      out.upper > (1.0 + req.epsilon) * ratio + out.certified_error) {
    throw std::logic_error("almost_tight: frame bounds escaped the requested bracket");
  }
  return out;
}

}  // namespace entif
