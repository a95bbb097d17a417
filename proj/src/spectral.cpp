#include "hilding/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "hilding/search.hpp"

namespace hilding {

namespace {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// eigenvalue of the trailing 2x2 closer to its bottom-right entry
Complex wilkinson_shift(const Complex& a, const Complex& b, const Complex& c,
                        const Complex& d) {
  const Complex half = 0.5 * (a + d);
  const Complex disc = std::sqrt(half * half - (a * d - b * c));
  const Complex mu1 = half + disc;
  const Complex mu2 = half - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

// one explicit shifted QR pass on the Hessenberg block [lo, hi]
void qr_pass(CMatrix& H, int lo, int hi, const Complex& mu) {
  const int b = hi - lo + 1;
  CMatrix block = H.block(lo, lo, b, b);
  const CMatrix shifted = block - mu * CMatrix::Identity(b, b);
  Eigen::HouseholderQR<CMatrix> qr(shifted);
  const CMatrix Q = qr.householderQ();
  const CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  block = R * Q + mu * CMatrix::Identity(b, b);
  // RQ of a Hessenberg matrix is Hessenberg; drop the roundoff fill below
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < i - 1; ++j) block(i, j) = 0.0;
  H.block(lo, lo, b, b) = block;
}

double smallest_singular_value(const CMatrix& M) {
  Eigen::JacobiSVD<CMatrix> svd(M);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1);
}

void require_square(const Operator& T, const char* what) {
  if (T.matrix.rows() != T.matrix.cols())
    throw config_error(std::string(what) + " needs a square operator");
}

}  // namespace

SpectrumReport spectrum(const Operator& T, const NumericPolicy& policy) {
  require_square(T, "spectrum");
  const int n = static_cast<int>(T.matrix.rows());
  if (n > policy.spectrum_max_dim)
    throw config_error("spectrum is limited to dimension " +
                       std::to_string(policy.spectrum_max_dim));

  const CMatrix A = T.matrix.cast<Complex>();
  Eigen::HessenbergDecomposition<CMatrix> hd(A);
  CMatrix H = hd.matrixH();

  std::vector<Complex> eigenvalues(n);
  const long budget = static_cast<long>(policy.qr_iters_per_eigenvalue) * n;
  long iters = 0;
  int stall = 0;
  int hi = n - 1;
  while (hi >= 0) {
    // deflate negligible subdiagonals
    for (int k = 1; k <= hi; ++k) {
      const double scale = std::abs(H(k - 1, k - 1)) + std::abs(H(k, k));
      if (std::abs(H(k, k - 1)) <= policy.deflation_tol * scale) H(k, k - 1) = 0.0;
    }
    if (hi == 0 || H(hi, hi - 1) == Complex(0.0)) {
      eigenvalues[hi] = H(hi, hi);
      --hi;
      stall = 0;
      continue;
    }
    int lo = hi;
    while (lo > 0 && H(lo, lo - 1) != Complex(0.0)) --lo;

    Complex mu;
    ++stall;
    if (stall % 12 == 0) {
      // stalls happen on perfectly balanced blocks; an off-pattern shift
      // breaks the symmetry (same trick the classic implementations use)
      mu = H(hi, hi) + Complex(0.75 * std::abs(H(hi, hi - 1)), 0.0);
    } else {
      mu = wilkinson_shift(H(hi - 1, hi - 1), H(hi - 1, hi), H(hi, hi - 1),
                           H(hi, hi));
    }
    qr_pass(H, lo, hi, mu);
    if (++iters > budget)
      throw numeric_error("eigenvalue iteration did not converge within " +
                          std::to_string(budget) + " steps");
  }

  SpectrumReport report;
  report.eigenvalues = std::move(eigenvalues);
  report.residuals.reserve(n);
  for (const Complex& ev : report.eigenvalues)
    report.residuals.push_back(
        smallest_singular_value(A - ev * CMatrix::Identity(n, n)));
  return report;
}

ApproxWitness aps_residual(const Operator& T, double lambda, std::uint64_t seed,
                           const NumericPolicy& policy) {
  require_square(T, "approximate-point-spectrum residual");
  if (T.domain.exp != T.codomain.exp)
    throw config_error("residuals need one exponent on both sides");
  const Eigen::Index n = T.matrix.rows();
  const Eigen::MatrixXd M =
      T.matrix - lambda * Eigen::MatrixXd::Identity(n, n);
  const Exponent& p = T.domain.exp;

  if (p == Exponent::two()) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::VectorXd v = svd.matrixV().col(n - 1);
    return {Complex(lambda, 0.0), Vec(v, T.domain), sv(sv.size() - 1), true};
  }

  // other exponents: searched minimum, an upper bound on the true infimum
  SphereObjective f = [&M, &p](const Eigen::VectorXd& x) {
    return lp_norm(M * x, p);
  };
  SphereGradient g = [&M, &p](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(M.transpose() * norm_subgradient(M * x, p));
  };
  SearchResult r = sphere_minimize(f, g, static_cast<int>(n), p, seed, policy);
  return {Complex(lambda, 0.0), Vec(r.point, T.domain), r.value, false};
}

ApproxWitness fixed_point_gap(const Operator& T, std::uint64_t seed,
                              const NumericPolicy& policy) {
  return aps_residual(T, 1.0, seed, policy);
}

ApproxWitness antipodal_gap(const Operator& T, std::uint64_t seed,
                            const NumericPolicy& policy) {
  return aps_residual(T, -1.0, seed, policy);
}

RayScanReport ray_scan(const Operator& T, RayDirection direction,
                       const std::vector<double>& grid,
                       const std::optional<HildingCertificate>& cert,
                       std::uint64_t seed, const NumericPolicy& policy) {
  require_square(T, "ray scan");
  if (!T.is_endomorphism()) throw config_error("ray scan needs an endomorphism");
  RayScanReport report{direction, {}, true, true};
  const Eigen::Index n = T.matrix.rows();
  for (double alpha : grid) {
    if (direction == RayDirection::Positive && !(alpha > 0.0))
      throw config_error("positive ray scan needs alpha > 0 grid values");
    if (direction == RayDirection::Negative && !(alpha < 0.0))
      throw config_error("negative ray scan needs alpha < 0 grid values");

    const Operator A(alpha * Eigen::MatrixXd::Identity(n, n) - T.matrix,
                     T.domain);
    RayScanEntry entry;
    entry.alpha = alpha;
    entry.gain = min_gain_bounds(A, seed, policy);
    entry.invertible = numeric_rank(A, policy) == static_cast<int>(n);
    entry.consistent = true;
    if (cert && direction == RayDirection::Negative) {
      entry.certified_gain = ray_gain(*cert, alpha);
      const double measured = entry.gain.exact ? entry.gain.lower : entry.gain.upper;
      entry.consistent = measured >= *entry.certified_gain - policy.consistency_tol;
    }
    report.all_invertible = report.all_invertible && entry.invertible;
    report.consistent = report.consistent && entry.consistent;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace hilding
