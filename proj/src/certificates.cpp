#include "hilding/certificates.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hilding/search.hpp"

namespace hilding {

HildingCertificate::HildingCertificate(double l1, double l2)
    : lambda1(l1), lambda2(l2) {
  if (!(l1 >= 0.0 && l1 < 1.0 && l2 >= 0.0 && l2 < 1.0))
    throw config_error("certificate constants must lie in [0, 1)");
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "Verified";
    case VerdictStatus::Refuted: return "Refuted";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

SandwichBounds basic_bounds(const HildingCertificate& c) {
  return {(1.0 - c.lambda2) / (1.0 + c.lambda1),
          (1.0 + c.lambda2) / (1.0 - c.lambda1)};
}

namespace {

void require_same_shape(const Operator& S, const Operator& T) {
  if (S.domain != T.domain || S.codomain != T.codomain)
    throw config_error("the two operators must share domain and codomain");
}

struct RatioSearch {
  double value;
  Eigen::VectorXd point;
};

RatioSearch fit_lambda_search(const Operator& S, const Operator& T,
                              std::uint64_t seed, int starts,
                              const NumericPolicy& policy) {
  require_same_shape(S, T);
  const Eigen::MatrixXd D = S.matrix - T.matrix;
  const Exponent pd = S.domain.exp;
  const Exponent pc = S.codomain.exp;
  SphereObjective ratio = [&](const Eigen::VectorXd& x) {
    const double num = lp_norm(D * x, pc);
    const double den = lp_norm(S.matrix * x, pc) + lp_norm(T.matrix * x, pc);
    return den == 0.0 ? 0.0 : num / den;
  };
  SphereGradient grad = [&](const Eigen::VectorXd& x) {
    const Eigen::VectorXd dx = D * x, sx = S.matrix * x, tx = T.matrix * x;
    const double num = lp_norm(dx, pc);
    const double den = lp_norm(sx, pc) + lp_norm(tx, pc);
    if (den == 0.0) return Eigen::VectorXd(Eigen::VectorXd::Zero(x.size()));
    const Eigen::VectorXd gnum = D.transpose() * norm_subgradient(dx, pc);
    const Eigen::VectorXd gden = S.matrix.transpose() * norm_subgradient(sx, pc) +
                                 T.matrix.transpose() * norm_subgradient(tx, pc);
    return Eigen::VectorXd((gnum * den - num * gden) / (den * den));
  };
  SearchResult r = sphere_maximize(ratio, grad, S.domain.dim, pd, seed, policy,
                                   starts);
  return {r.value, std::move(r.point)};
}

}  // namespace

double fit_lambda(const Operator& S, const Operator& T, std::uint64_t seed,
                  int starts, const NumericPolicy& policy) {
  return fit_lambda_search(S, T, seed, starts, policy).value;
}

Verdict verify_certificate(const Operator& S, const Operator& T,
                           const HildingCertificate& c, std::uint64_t seed,
                           const NumericPolicy& policy) {
  require_same_shape(S, T);
  const Exponent pc = S.codomain.exp;
  const Operator D(S.matrix - T.matrix, S.domain, S.codomain);

  // sound route: a norm comparison that covers every x at once
  const double diff_upper = op_norm_bounds(D, seed, policy).upper;
  const double budget = c.lambda1 * min_gain_bounds(S, seed, policy).lower +
                        c.lambda2 * min_gain_bounds(T, seed, policy).lower;
  if (diff_upper <= budget)
    return {VerdictStatus::Verified, std::nullopt, budget - diff_upper};

  // Gains vanish whenever a kernel exists, but if S and T annihilate the
  // same subspace the comparison restricted to a complement is just as
  // universal: x splits as kernel + complement and only the complement part
  // reaches either operator.
  const int n = S.domain.dim;
  if (numeric_rank(S, policy) < n) {
    const SubspaceBasis kerS = kernel_basis(S, policy);
    const SubspaceBasis kerT = kernel_basis(T, policy);
    if (kerS.count() > 0 && kerS.count() == kerT.count() &&
        spans_equal(kerS, kerT, policy.span_tol, policy)) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(S.matrix, Eigen::ComputeFullV);
      const int r = n - kerS.count();
      const Eigen::MatrixXd C = svd.matrixV().leftCols(r);
      const Space cdom(r, S.domain.exp);
      const Operator Sc(S.matrix * C, cdom, S.codomain);
      const Operator Tc(T.matrix * C, cdom, T.codomain);
      const Operator Dc(Sc.matrix - Tc.matrix, cdom, S.codomain);
      const double diff_c = op_norm_bounds(Dc, seed, policy).upper;
      const double budget_c =
          c.lambda1 * min_gain_bounds(Sc, seed, policy).lower +
          c.lambda2 * min_gain_bounds(Tc, seed, policy).lower;
      if (diff_c <= budget_c)
        return {VerdictStatus::Verified, std::nullopt, budget_c - diff_c};
    }
  }

  // refutation: search for a pointwise violation
  SphereObjective violation = [&](const Eigen::VectorXd& x) {
    return lp_norm(D.matrix * x, pc) - c.lambda1 * lp_norm(S.matrix * x, pc) -
           c.lambda2 * lp_norm(T.matrix * x, pc);
  };
  SphereGradient vgrad = [&](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(
        D.matrix.transpose() * norm_subgradient(D.matrix * x, pc) -
        c.lambda1 * S.matrix.transpose() * norm_subgradient(S.matrix * x, pc) -
        c.lambda2 * T.matrix.transpose() * norm_subgradient(T.matrix * x, pc));
  };
  SearchResult r = sphere_maximize(violation, vgrad, S.domain.dim,
                                   S.domain.exp, seed, policy);
  const double sn = lp_norm(S.matrix * r.point, pc);
  const double tn = lp_norm(T.matrix * r.point, pc);
  if (r.value > policy.refute_tol * (sn + tn) && sn + tn > 0.0)
    return {VerdictStatus::Refuted, Vec(r.point, S.domain), r.value};

  return {VerdictStatus::Inconclusive, std::nullopt, r.value};
}

HildingCertificate cert_inverse(const HildingCertificate& c) {
  return {c.lambda2, c.lambda1};
}

HildingCertificate cert_scale(const HildingCertificate& c, double alpha) {
  if (!(alpha > 0.0)) throw config_error("scale factor must be positive");
  if (alpha <= 1.0) {
    const double l1 = std::max(1.0 - alpha * (1.0 - c.lambda1), c.lambda1);
    return {l1, c.lambda2};
  }
  const double l2 = std::max((c.lambda2 + alpha - 1.0) / alpha, c.lambda2);
  return {c.lambda1, l2};
}

HildingCertificate cert_homotopy(const HildingCertificate& c, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw config_error("homotopy parameter must lie in [0, 1]");
  return {alpha * c.lambda1 + (1.0 - alpha) * c.lambda2, c.lambda2};
}

double ray_gain(const HildingCertificate& c, double a) {
  if (!(a < 0.0)) throw config_error("ray gain is defined for a < 0");
  const double scale = std::abs(a) + 1.0;
  const HildingCertificate h = cert_homotopy(c, 1.0 / scale);
  return scale * (1.0 - h.lambda1) / (1.0 + h.lambda2);
}

double repair_bounded(double lambda, double norm_upper) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw config_error("lambda must lie in [0, 1)");
  if (!(norm_upper >= 0.0)) throw config_error("norm bound must be nonnegative");
  return (lambda + norm_upper) / (1.0 + norm_upper);
}

double repair_inverse_bounded(double lambda, double inverse_norm_upper) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw config_error("lambda must lie in [0, 1)");
  if (!(inverse_norm_upper >= 0.0))
    throw config_error("norm bound must be nonnegative");
  return (lambda + inverse_norm_upper) / (1.0 + inverse_norm_upper);
}

}  // namespace hilding
