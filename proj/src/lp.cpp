#include "hilding/lp.hpp"

#include <Eigen/Dense>
#include <charconv>
#include <cmath>

#include "hilding/rng.hpp"

namespace hilding {

Exponent Exponent::finite(double p) {
  if (!std::isfinite(p) || p < 1.0)
    throw config_error("exponent must be a finite real >= 1 (use inf for the sup norm)");
  return Exponent(p, false);
}

double Exponent::value() const {
  if (inf_) throw config_error("the sup-norm exponent has no finite value");
  return p_;
}

Exponent Exponent::dual() const {
  if (inf_) return one();
  if (p_ == 1.0) return inf();
  return finite(p_ / (p_ - 1.0));
}

std::string Exponent::str() const {
  if (inf_) return "inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), p_);
  return std::string(buf, res.ptr);
}

Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return Exponent::inf();
  double p = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), p);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw config_error("cannot parse exponent '" + text + "'");
  return Exponent::finite(p);
}

Space::Space(int dim_, Exponent exp_) : dim(dim_), exp(exp_) {
  if (dim < 1) throw config_error("space dimension must be >= 1");
}

Vec::Vec(Eigen::VectorXd coords_, Space space_)
    : coords(std::move(coords_)), space(space_) {
  if (coords.size() != space.dim)
    throw config_error("vector length does not match its space");
}

SubspaceBasis::SubspaceBasis(Eigen::MatrixXd vectors_, Space space_)
    : vectors(std::move(vectors_)), space(space_) {
  if (vectors.rows() != space.dim)
    throw config_error("basis vectors do not live in the given space");
}

SubspaceBasis SubspaceBasis::from_vecs(const std::vector<Vec>& vs) {
  if (vs.empty()) throw config_error("cannot build a basis from no vectors");
  Eigen::MatrixXd m(vs.front().space.dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].space != vs.front().space)
      throw config_error("basis vectors must share one space");
    m.col(static_cast<Eigen::Index>(j)) = vs[j].coords;
  }
  return SubspaceBasis(std::move(m), vs.front().space);
}

double lp_norm(const Eigen::VectorXd& x, const Exponent& p) {
  if (x.size() == 0) return 0.0;
  if (p.is_inf()) return x.cwiseAbs().maxCoeff();
  const double pv = p.value();
  if (pv == 1.0) return x.cwiseAbs().sum();
  if (pv == 2.0) return x.norm();
  // scale by the max to keep pow well-conditioned
  const double scale = x.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    acc += std::pow(std::abs(x(i)) / scale, pv);
  return scale * std::pow(acc, 1.0 / pv);
}

double vec_norm(const Vec& x) { return lp_norm(x.coords, x.space.exp); }

Eigen::VectorXd lp_normalize(const Eigen::VectorXd& x, const Exponent& p) {
  const double n = lp_norm(x, p);
  if (n <= 0.0 || !std::isfinite(n))
    throw config_error("cannot normalize a zero or non-finite vector");
  return x / n;
}

std::vector<Eigen::VectorXd> sphere_sample_coords(int dim, const Exponent& p,
                                                  int count, std::uint64_t seed) {
  if (dim < 1) throw config_error("sphere sample needs dimension >= 1");
  if (count < 1) throw config_error("sphere sample count must be >= 1");
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < dim && static_cast<int>(out.size()) < count; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(i) = 1.0;
    out.push_back(e);
    if (static_cast<int>(out.size()) < count) out.push_back(-e);
  }
  Rng rng(seed);
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXd g = rng.gaussian_vector(dim);
    const double n = lp_norm(g, p);
    if (n < 1e-300) continue;
    out.push_back(g / n);
  }
  return out;
}

std::vector<Vec> sphere_sample(const Space& space, int count, std::uint64_t seed) {
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (auto& c : sphere_sample_coords(space.dim, space.exp, count, seed))
    out.emplace_back(std::move(c), space);
  return out;
}

double subspace_distance(const Eigen::VectorXd& x, const Eigen::MatrixXd& basis,
                         const NumericPolicy& policy) {
  if (basis.cols() == 0) throw config_error("subspace distance needs a nonempty basis");
  if (basis.rows() != x.size())
    throw config_error("vector and basis dimensions do not match");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double tol = policy.rank_tol_scale * smax * static_cast<double>(basis.rows());
  if (smax == 0.0 || sv(sv.size() - 1) <= tol)
    throw config_error("degenerate subspace basis (numerically rank-deficient)");
  const Eigen::VectorXd coeffs = svd.solve(x);
  return (x - basis * coeffs).norm();
}

double subspace_distance(const Vec& x, const SubspaceBasis& B,
                         const NumericPolicy& policy) {
  if (B.space.dim != x.space.dim)
    throw config_error("vector and basis live in different spaces");
  return subspace_distance(x.coords, B.vectors, policy);
}

}  // namespace hilding
