#include "hilding/gallery.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "hilding/certificates.hpp"
#include "hilding/spectral.hpp"

namespace hilding {

namespace {

constexpr int kIsometrySamples = 10000;
constexpr int kMatrixCap = 200;  // dense storage cap for gallery operators

double isometry_defect(const Operator& T, std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& x : sphere_sample(T.domain, kIsometrySamples, seed))
    worst = std::max(worst,
                     std::abs(lp_norm(T.matrix * x.coords, T.codomain.exp) - 1.0));
  return worst;
}

Eigen::MatrixXd block_rotation_matrix(int m) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int b = 0; b < m; ++b) {
    M(2 * b, 2 * b + 1) = 1.0;
    M(2 * b + 1, 2 * b) = -1.0;
  }
  return M;
}

}  // namespace

bool GalleryInstance::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

GalleryInstance rotation_l1(std::uint64_t seed, const NumericPolicy& policy) {
  const Space s(2, Exponent::one());
  const Operator T(block_rotation_matrix(1), s);
  const Operator I = Operator::identity(s);

  GalleryInstance g;
  g.name = "rotation_l1";
  g.operators.emplace("T", T);

  const double fitted = fit_lambda(I, T, seed, -1, policy);
  g.claims.push_back({"fitted symmetric constant equals 1 (no certificate "
                      "below 1 exists)",
                      std::abs(fitted - 1.0) <= 1e-6, fitted});

  const double fixed = fixed_point_gap(T, seed, policy).residual;
  g.claims.push_back({"fixed-point gap equals 1 (minimum of ||x - Tx|| on "
                      "the unit sphere)",
                      std::abs(fixed - 1.0) <= 1e-6, fixed});

  const double anti = antipodal_gap(T, seed, policy).residual;
  g.claims.push_back({"antipodal gap equals 1",
                      std::abs(anti - 1.0) <= 1e-6, anti});

  const double defect = isometry_defect(T, seed);
  const bool onto = numeric_rank(T, policy) == 2;
  g.claims.push_back({"T is an onto isometry (sampled norm defect below 1e-12, "
                      "full rank)",
                      onto && defect <= 1e-12, defect});
  return g;
}

GalleryInstance block_rotation(int m, const Exponent& p, std::uint64_t seed,
                               const NumericPolicy& policy) {
  if (m < 1) throw config_error("block count must be >= 1");
  if (2 * m > policy.spectrum_max_dim)
    throw config_error("block rotation gallery is limited to dimension " +
                       std::to_string(policy.spectrum_max_dim));
  const Space s(2 * m, p);
  const Operator T(block_rotation_matrix(m), s);

  GalleryInstance g;
  std::ostringstream name;
  name << "block_rotation(m=" << m << ", p=" << p.str() << ")";
  g.name = name.str();
  g.operators.emplace("T", T);

  const double defect = isometry_defect(T, seed);
  const bool onto = numeric_rank(T, policy) == 2 * m;
  g.claims.push_back({"T is an onto isometry", onto && defect <= 1e-12, defect});

  // gap floor: sqrt(2) at p = 2 exactly, otherwise transferred through the
  // lp/l2 equivalence constants on 2m coordinates
  const double shift = std::abs(p.inverse() - 0.5);
  const double floor = std::sqrt(2.0) * std::pow(2.0 * m, -shift);
  const double fixed = fixed_point_gap(T, seed, policy).residual;
  const double anti = antipodal_gap(T, seed, policy).residual;
  if (p == Exponent::two()) {
    g.claims.push_back({"fixed-point gap equals sqrt(2)",
                        std::abs(fixed - std::sqrt(2.0)) <= 1e-9, fixed});
    g.claims.push_back({"antipodal gap equals sqrt(2)",
                        std::abs(anti - std::sqrt(2.0)) <= 1e-9, anti});
  } else {
    g.claims.push_back({"fixed-point gap stays above the transfer floor",
                        fixed >= floor - 1e-9 && fixed > 0.0, fixed});
    g.claims.push_back({"antipodal gap stays above the transfer floor",
                        anti >= floor - 1e-9 && anti > 0.0, anti});
  }

  const SpectrumReport spec = spectrum(T, policy);
  double ev_defect = 0.0;
  int positive_imag = 0;
  for (const auto& ev : spec.eigenvalues) {
    ev_defect = std::max(ev_defect, std::min(std::abs(ev - std::complex<double>(0, 1)),
                                             std::abs(ev + std::complex<double>(0, 1))));
    if (ev.imag() > 0) ++positive_imag;
  }
  g.claims.push_back({"spectrum is {i, -i}, each with multiplicity m",
                      ev_defect <= 1e-9 && positive_imag == m, ev_defect});

  double min_sigma = std::numeric_limits<double>::infinity();
  bool all_invertible = true;
  for (double alpha : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
    const Eigen::MatrixXd A =
        alpha * Eigen::MatrixXd::Identity(2 * m, 2 * m) - T.matrix;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    min_sigma = std::min(min_sigma, svd.singularValues()(2 * m - 1));
    all_invertible = all_invertible && numeric_rank(A, policy) == 2 * m;
  }
  g.claims.push_back({"every real ray alpha*I - T is invertible",
                      all_invertible && min_sigma > 0.0, min_sigma});
  return g;
}

GalleryInstance truncated_shift(int n, std::uint64_t seed,
                                const NumericPolicy& policy) {
  (void)seed;
  (void)policy;
  if (n < 2) throw config_error("truncated shift needs n >= 2");
  const Space s(n, Exponent::two());

  // witness and residual computed coordinate-wise; the dense matrix is only
  // materialized at small sizes
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::VectorXd Sx(n);
  Sx(0) = 0.0;
  for (int i = 1; i < n; ++i) Sx(i) = x(i - 1);
  const double residual = (x - Sx).norm();

  GalleryInstance g;
  std::ostringstream name;
  name << "truncated_shift(n=" << n << ")";
  g.name = name.str();
  if (n <= kMatrixCap) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) M(i, i - 1) = 1.0;
    g.operators.emplace("S", Operator(std::move(M), s));
  }

  const double rate = residual * std::sqrt(static_cast<double>(n));
  g.claims.push_back({"asymptotic: residual * sqrt(n) = 1 pins the vanishing "
                      "rate of the defect of the (infinite-model) shift "
                      "isometry; not literal at finite n",
                      std::abs(rate - 1.0) <= 1e-12, rate});

  g.claims.push_back({"the defect of the uniform witness sits in one "
                      "coordinate: ||x - Sx|| = |x_1|",
                      std::abs(residual - std::abs(x(0))) <= 1e-15,
                      residual - std::abs(x(0))});

  const double iso_defect =
      std::abs(Sx.squaredNorm() - (x.squaredNorm() - x(n - 1) * x(n - 1)));
  g.claims.push_back({"truncation is isometric except for the dropped top "
                      "coordinate: ||Sx||^2 = ||x||^2 - x_n^2",
                      iso_defect <= 1e-15, iso_defect});
  return g;
}

GalleryInstance diagonal_growth(int n, const Exponent& p, std::uint64_t seed,
                                const NumericPolicy& policy) {
  if (n < 1) throw config_error("diagonal growth needs n >= 1");
  if (n > kMatrixCap)
    throw config_error("diagonal growth gallery is limited to n <= " +
                       std::to_string(kMatrixCap));
  const Space s(n, p);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = static_cast<double>(i + 1);
  const Operator T(Eigen::MatrixXd(d.asDiagonal()), s);
  const Operator I = Operator::identity(s);

  GalleryInstance g;
  std::ostringstream name;
  name << "diagonal_growth(n=" << n << ", p=" << p.str() << ")";
  g.name = name.str();
  g.operators.emplace("T", T);

  // ||(I - T)x|| <= ||Tx|| holds coordinate-wise: |i - 1| <= i
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& x : sphere_sample(s, kIsometrySamples, seed)) {
    const double lhs = lp_norm(x.coords - T.matrix * x.coords, p);
    const double rhs = lp_norm(T.matrix * x.coords, p);
    worst = std::max(worst, lhs - rhs);
  }
  g.claims.push_back({"||(I - T)x|| <= ||Tx|| on every sample (the "
                      "degenerate boundary certificate)",
                      worst <= 1e-12, worst});

  const double fitted = fit_lambda(I, T, seed, -1, policy);
  const double expect = (static_cast<double>(n) - 1.0) / (static_cast<double>(n) + 1.0);
  g.claims.push_back({"fitted symmetric constant reaches (n-1)/(n+1) and "
                      "stays below 1",
                      fitted >= expect - 1e-9 && fitted < 1.0, fitted});

  const double delta = repair_bounded(0.0, static_cast<double>(n));
  g.claims.push_back({"repaired symmetric constant is n/(n+1), approaching 1 "
                      "with the norm",
                      std::abs(delta - static_cast<double>(n) /
                                           (static_cast<double>(n) + 1.0)) <= 1e-15,
                      delta});
  return g;
}

GalleryInstance example10(int m, const Exponent& p, double K, std::uint64_t seed,
                          const NumericPolicy& policy) {
  (void)seed;
  if (m < 1) throw config_error("block dimension must be >= 1");
  if (!(K > 0.0)) throw config_error("K must be positive");
  // the graph column must be dominated: (1/K)||a|| <= (1/2)||a||
  const double ratio = 1.0 / K;
  if (ratio > 0.5) {
    std::ostringstream msg;
    msg << "K = " << K << " violates the norm condition: measured ratio "
        << ratio << " > 0.5";
    throw config_error(msg.str());
  }

  const int dim = 2 * m;
  const Space X(dim, p);
  const Space Ycoords(m, p);

  Eigen::MatrixXd Yb = Eigen::MatrixXd::Zero(dim, m);      // (e_i, 0)
  Eigen::MatrixXd Zb = Eigen::MatrixXd::Zero(dim, m);      // (e_i, e_i / K)
  Eigen::MatrixXd Tmat = Eigen::MatrixXd::Zero(dim, m);    // graph map on Y
  for (int i = 0; i < m; ++i) {
    Yb(i, i) = 1.0;
    Zb(i, i) = 1.0;
    Zb(m + i, i) = 1.0 / K;
    Tmat(i, i) = 1.0;
    Tmat(m + i, i) = 1.0 / K;
  }
  Eigen::MatrixXd Pmat = Eigen::MatrixXd::Zero(dim, dim);  // (a,b) -> (K b, b)
  for (int i = 0; i < m; ++i) {
    Pmat(i, m + i) = K;
    Pmat(m + i, m + i) = 1.0;
  }

  const SubspaceBasis Y(Yb, X);
  const SubspaceBasis Z(Zb, X);
  const Operator T(Tmat, Ycoords, X);
  const Operator P(Pmat, X);

  GalleryInstance g;
  std::ostringstream name;
  name << "example10(m=" << m << ", p=" << p.str() << ", K=" << K << ")";
  g.name = name.str();
  g.operators.emplace("T", T);
  g.operators.emplace("P", P);

  // (I - T)|_Y sends (a, 0) to (0, -a/K); the basis is canonical, so the
  // coordinate operator norm is the restricted norm itself
  Eigen::MatrixXd Dmat = Yb - Tmat;
  const BoundInterval dn = op_norm_bounds(Operator(Dmat, Ycoords, X), seed, policy);
  g.claims.push_back({"||(I - T)|_Y|| = 1/K, strictly below 1",
                      std::abs(dn.upper - 1.0 / K) <= 1e-12 && dn.upper < 1.0,
                      dn.upper});

  const double proj_defect = (Pmat * Pmat - Pmat).cwiseAbs().maxCoeff();
  const double range_defect = span_defect(range_basis(P, policy), Z, policy);
  g.claims.push_back({"P is a projection of X onto Z (P^2 = P entrywise, "
                      "range span equals Z)",
                      proj_defect <= 1e-12 && range_defect <= policy.span_tol,
                      proj_defect});

  const BoundInterval gain = min_gain_bounds(T, seed, policy);
  const double t_range_defect = span_defect(range_basis(T, policy), Z, policy);
  g.claims.push_back({"T is an isomorphism of Y onto Z (gain bounded below, "
                      "image span equals Z)",
                      gain.lower > 0.0 && t_range_defect <= policy.span_tol,
                      gain.lower});

  const int cY = codim(Y, X, policy);
  const int cZ = codim(Z, X, policy);
  g.claims.push_back({"codim Y = codim Z = m",
                      cY == m && cZ == m, static_cast<double>(cY)});
  return g;
}

GalleryInstance make_gallery(const std::string& name, const GalleryParams& params,
                             std::uint64_t seed, const NumericPolicy& policy) {
  if (name == "rotation_l1") return rotation_l1(seed, policy);
  if (name == "block_rotation") return block_rotation(params.m, params.p, seed, policy);
  if (name == "truncated_shift") return truncated_shift(params.n, seed, policy);
  if (name == "diagonal_growth") return diagonal_growth(params.n, params.p, seed, policy);
  if (name == "example10") return example10(params.m, params.p, params.K, seed, policy);
  throw config_error("unknown gallery name '" + name + "'");
}

std::vector<std::string> gallery_names() {
  return {"rotation_l1", "block_rotation", "truncated_shift", "diagonal_growth",
          "example10"};
}

}  // namespace hilding
