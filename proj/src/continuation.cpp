#include "hilding/continuation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "hilding/search.hpp"

namespace hilding {

double epsilon_step(double lambda, double norm_upper) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw config_error("lambda must lie in [0, 1)");
  if (!(norm_upper >= 0.0)) throw config_error("norm bound must be nonnegative");
  return 0.5 * ((1.0 - lambda) / (1.0 + lambda)) * (1.0 / (1.0 + norm_upper));
}

ContinuationTrace verify_codim_preservation(const SubspaceBasis& Y,
                                            const Operator& T,
                                            const HildingCertificate& c,
                                            std::uint64_t seed,
                                            const NumericPolicy& policy) {
  if (!T.is_endomorphism())
    throw config_error("the continuation verifier needs an endomorphism");
  if (Y.space != T.domain)
    throw config_error("subspace does not live in the operator's space");

  const Operator S = embedding(Y);                 // also validates Y
  const Operator TY = restrict_to(T, Y, policy);
  Verdict v = verify_certificate(S, TY, c, seed, policy);
  if (!v.verified())
    throw certificate_not_verified(
        std::string("continuation needs a verified certificate on the "
                    "restriction (got ") +
            to_string(v.status) + ")",
        v);

  const Exponent& p = T.domain.exp;
  const int n = T.domain.dim;
  const int k = Y.count();
  const double lambda = c.max_lambda();
  const double gain_floor = (1.0 - lambda) / (1.0 + lambda);
  const double norm_upper = restricted_norm_upper(T, Y, seed, policy);
  const double eps = epsilon_step(lambda, norm_upper);

  const long steps = static_cast<long>(std::ceil(1.0 / eps));
  if (steps > policy.max_path_steps)
    throw numeric_error("continuation path needs too many steps (" +
                        std::to_string(steps) + ")");

  // coordinate samples rescaled so the embedded vectors are ambient-unit
  std::vector<Eigen::VectorXd> samples;
  for (auto& c0 : sphere_sample_coords(k, p, std::max(policy.path_samples, 2 * k),
                                       seed)) {
    const double nn = lp_norm(Y.vectors * c0, p);
    if (nn < 1e-300) continue;  // excluded by basis independence
    samples.push_back(c0 / nn);
  }

  ContinuationTrace trace;
  trace.lambda = lambda;
  trace.gain_floor = gain_floor;
  trace.epsilon = eps;
  trace.norm_upper = norm_upper;

  Eigen::MatrixXd prev;
  int base_rank = -1;
  for (long i = 0; i <= steps; ++i) {
    const double alpha = static_cast<double>(i) / static_cast<double>(steps);
    const Eigen::MatrixXd Ta =
        (1.0 - alpha) * S.matrix + alpha * TY.matrix;

    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& cs : samples)
      min_ratio = std::min(min_ratio, lp_norm(Ta * cs, p));
    if (min_ratio < gain_floor - policy.consistency_tol) {
      std::ostringstream msg;
      msg << "gain floor violated at alpha = " << alpha << ": sampled ratio "
          << min_ratio << " < " << gain_floor;
      throw numeric_error(msg.str());
    }

    double step_gap = 0.0;
    if (i > 0) {
      const double dalpha = 1.0 / static_cast<double>(steps);
      const Eigen::MatrixXd D = Ta - prev;
      for (const auto& cs : samples) {
        const double dn = lp_norm(D * cs, p);
        if (dn > dalpha * (1.0 + norm_upper) + policy.consistency_tol) {
          std::ostringstream msg;
          msg << "step perturbation bound violated at alpha = " << alpha;
          throw numeric_error(msg.str());
        }
        const double tn = lp_norm(Ta * cs, p);
        if (tn > 0.0) step_gap = std::max(step_gap, dn / tn);
      }
      // the image-to-image transfer both ways needs a contraction below 1/2
      if (step_gap >= 0.5) {
        std::ostringstream msg;
        msg << "contraction condition failed at alpha = " << alpha
            << ": step gap " << step_gap << " >= 0.5";
        throw numeric_error(msg.str());
      }
    }

    const int rank = numeric_rank(Ta, policy);
    trace.steps.push_back({alpha, rank, n - rank, step_gap, min_ratio});
    if (base_rank < 0) {
      base_rank = rank;
    } else if (rank != base_rank) {
      std::ostringstream msg;
      msg << "rank jumped from " << base_rank << " to " << rank
          << " at alpha = " << alpha
          << " (numeric policy breach along the path; epsilon = " << eps << ")";
      throw numeric_error(msg.str());
    }
    prev = Ta;
  }

  trace.codim_start = n - numeric_rank(Y.vectors, policy);
  trace.codim_end = n - numeric_rank(TY.matrix, policy);
  trace.preserved = trace.codim_start == trace.codim_end;
  return trace;
}

std::pair<int, int> codim_pair(const Operator& S, const Operator& T,
                               double lambda, std::uint64_t seed,
                               const NumericPolicy& policy) {
  if (S.domain != T.domain || S.codomain != T.codomain)
    throw config_error("the two operators must share domain and codomain");
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw config_error("lambda must lie in [0, 1)");

  const double fitted = fit_lambda(S, T, seed, -1, policy);
  if (fitted > lambda + policy.refute_tol) {
    Verdict refuted{VerdictStatus::Refuted, std::nullopt, fitted - lambda};
    throw certificate_not_verified(
        "fitted ratio " + std::to_string(fitted) +
            " exceeds the requested lambda " + std::to_string(lambda),
        refuted);
  }

  const int cS = S.codomain.dim - numeric_rank(S, policy);
  const int cT = T.codomain.dim - numeric_rank(T, policy);
  if (cS != cT)
    throw numeric_error(
        "range codimensions disagree (" + std::to_string(cS) + " vs " +
        std::to_string(cT) +
        "); the symmetric certificate is numerically too weak");
  return {cS, cT};
}

FredholmReport fredholm_check(const Operator& S, const Operator& T,
                              const HildingCertificate& c, std::uint64_t seed,
                              const NumericPolicy& policy) {
  Verdict v = verify_certificate(S, T, c, seed, policy);
  if (!v.verified())
    throw certificate_not_verified(
        std::string("index transfer needs a verified certificate (got ") +
            to_string(v.status) + ")",
        v);

  const int n = S.domain.dim;
  const int m = S.codomain.dim;
  const SubspaceBasis kS = kernel_basis(S, policy);
  const SubspaceBasis kT = kernel_basis(T, policy);

  FredholmReport r;
  r.kernel_dim_S = kS.count();
  r.kernel_dim_T = kT.count();
  r.range_codim_S = m - numeric_rank(S, policy);
  r.range_codim_T = m - numeric_rank(T, policy);
  r.index_S = r.kernel_dim_S - r.range_codim_S;
  r.index_T = r.kernel_dim_T - r.range_codim_T;
  r.kernel_defect =
      (kS.count() == 0 && kT.count() == 0) ? 0.0 : span_defect(kS, kT, policy);
  r.kernels_match = kS.count() == kT.count() && r.kernel_defect <= policy.span_tol;
  r.index_equal = r.index_S == r.index_T;
  r.rank_nullity_index = n - m;
  return r;
}

double krylov_membership(const Operator& T, const HildingCertificate& c,
                         const Vec& x, int n, int K, std::uint64_t seed,
                         const NumericPolicy& policy) {
  if (!T.is_endomorphism())
    throw config_error("iterated spans need an endomorphism");
  if (x.space != T.domain)
    throw config_error("vector is not in the operator's space");
  if (n < 0) throw config_error("power offset must be nonnegative");
  if (K < n) throw config_error("power range must satisfy K >= n");

  // symmetric-form certificate on (I, T)
  const double lam = c.max_lambda();
  Verdict v = verify_certificate(Operator::identity(T.domain), T,
                                 HildingCertificate(lam, lam), seed, policy);
  if (!v.verified())
    throw certificate_not_verified(
        std::string("membership needs a verified symmetric certificate (got ") +
            to_string(v.status) + ")",
        v);

  const Eigen::Index dim = x.coords.size();
  Eigen::MatrixXd powers(dim, K - n + 1);
  Eigen::VectorXd w = x.coords;
  for (int k = 0; k < n; ++k) w = T.matrix * w;
  for (int j = 0; j <= K - n; ++j) {
    const double wn = w.norm();
    powers.col(j) = wn > 1e-300 ? Eigen::VectorXd(w / wn) : w;
    if (j < K - n) w = T.matrix * w;
  }

  // distance through an orthonormal basis of the (often ill-conditioned)
  // power span; column scaling above keeps the rank decision meaningful
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(powers, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double tol = policy.rank_tol_scale *
                     static_cast<double>(std::max(powers.rows(), powers.cols())) *
                     (sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  if (rank == 0) return x.coords.norm();
  const Eigen::MatrixXd U = svd.matrixU().leftCols(rank);
  return (x.coords - U * (U.transpose() * x.coords)).norm();
}

}  // namespace hilding
