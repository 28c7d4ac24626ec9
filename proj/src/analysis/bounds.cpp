#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "entif/analysis.hpp"
#include "entif/exact.hpp"

namespace entif {

FrameBounds frame_bounds_numeric(const FrameMatrix& a, double rel_tol) {
  if (a.dim() == 0 || rank(a) != a.dim()) throw NotAFrameError("frame bounds of a rank-deficient matrix");

  const FrameMatrix s = frame_operator(a);
  const std::size_t n = s.dim();

  // Work with S / sigma so that every entry lies in [-1, 1] regardless of
  // how large the integer entries are.
  mpz_class sigma = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (s(i, i) > sigma) sigma = s(i, i);

  Eigen::MatrixXd sn(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sn(i, j) = mpq_class(s(i, j), sigma).get_d();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sn);
  if (solver.info() != Eigen::Success) throw CertificationError("eigensolver did not converge");

  // Rounding S / sigma to double perturbs it by at most n * eps in Frobenius
  // norm, which bounds the eigenvalue shift (Weyl).
  const double input_err = static_cast<double>(n) * std::numeric_limits<double>::epsilon();

  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  auto certify = [&](Eigen::Index k) {
    Eigen::VectorXd x = vectors.col(k);
    x.normalize();
    const double theta = values(k);
    const double residual = (sn * x - theta * x).norm();
    const double err = residual + input_err + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(theta);
    if (err > rel_tol * std::abs(theta)) throw CertificationError("eigenvalue estimate not certified to the requested tolerance");
    return std::pair{theta, err};
  };

  const auto [lo, lo_err] = certify(0);
  const auto [hi, hi_err] = certify(static_cast<Eigen::Index>(n) - 1);
  const double scale = sigma.get_d();
  return {lo * scale, hi * scale, lo_err * scale, hi_err * scale};
}

}  // namespace entif
