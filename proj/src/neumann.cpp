#include "hilding/neumann.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hilding {

namespace {

void require_endomorphism(const Operator& T) {
  if (!T.is_endomorphism())
    throw config_error("the geometric series needs an endomorphism");
}

// minimal N with q^(N+1)/(1-q) <= tol, or the cap
long minimal_terms(double q, double tol, long cap) {
  double bound = q / (1.0 - q);  // tail after the N = 0 partial sum
  long n = 0;
  while (bound > tol) {
    bound *= q;
    if (++n > cap)
      throw numeric_error("geometric series needs more terms than the cap allows");
  }
  return n;
}

}  // namespace

NeumannResult neumann_inverse(const Operator& T, double tol, std::uint64_t seed,
                              const NumericPolicy& policy) {
  require_endomorphism(T);
  if (!(tol > 0.0)) throw config_error("tolerance must be positive");
  const Eigen::Index n = T.matrix.rows();
  const Eigen::MatrixXd E = Eigen::MatrixXd::Identity(n, n) - T.matrix;
  const Operator Eop(E, T.domain);
  const double q = op_norm_bounds(Eop, seed, policy).upper;
  if (!(q < 1.0))
    throw numeric_error(
        "cannot soundly establish ||I - T|| < 1 (bound " + std::to_string(q) +
        "); a certificate check may still apply");

  const long terms = minimal_terms(q, tol, policy.neumann_max_terms);

  // compensated accumulation keeps the long sums honest
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (long k = 1; k <= terms; ++k) {
    power = power * E;
    const Eigen::MatrixXd y = power - comp;
    const Eigen::MatrixXd t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  const double error_bound = std::pow(q, static_cast<double>(terms + 1)) / (1.0 - q);
  return {Operator(std::move(sum), T.domain), terms, q, error_bound};
}

Vec neumann_solve(const Operator& T, const Vec& b, double tol,
                  std::uint64_t seed, const NumericPolicy& policy) {
  require_endomorphism(T);
  if (b.space != T.codomain)
    throw config_error("right-hand side is not in the operator's codomain");
  if (!(tol > 0.0)) throw config_error("tolerance must be positive");
  const Eigen::Index n = T.matrix.rows();
  const Eigen::MatrixXd E = Eigen::MatrixXd::Identity(n, n) - T.matrix;
  const Operator Eop(E, T.domain);
  const double q = op_norm_bounds(Eop, seed, policy).upper;
  if (!(q < 1.0))
    throw numeric_error("cannot soundly establish ||I - T|| < 1");

  const long terms = minimal_terms(q, tol, policy.neumann_max_terms);
  Eigen::VectorXd sum = b.coords;
  Eigen::VectorXd comp = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd power = b.coords;
  for (long k = 1; k <= terms; ++k) {
    power = E * power;
    const Eigen::VectorXd y = power - comp;
    const Eigen::VectorXd t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return Vec(std::move(sum), T.domain);
}

SurjectivityReport certified_surjective(const Operator& T,
                                        const HildingCertificate& c,
                                        std::uint64_t seed,
                                        const NumericPolicy& policy) {
  require_endomorphism(T);
  Verdict v = verify_certificate(Operator::identity(T.domain), T, c, seed, policy);
  if (!v.verified())
    throw certificate_not_verified(
        std::string("surjectivity needs a verified certificate (got ") +
            to_string(v.status) + ")",
        v);

  const int rank = numeric_rank(T, policy);
  const BoundInterval gain = min_gain_bounds(T, seed, policy);
  const double floor = (1.0 - c.lambda1) / (1.0 + c.lambda2);
  const double measured = gain.exact ? gain.lower : gain.upper;
  SurjectivityReport report{
      std::move(v),
      rank,
      T.codomain.dim,
      rank == T.codomain.dim,
      floor,
      gain,
      floor <= measured + policy.consistency_tol,
  };
  return report;
}

}  // namespace hilding
