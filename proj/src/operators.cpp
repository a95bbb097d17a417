#include "hilding/operators.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hilding/search.hpp"

namespace hilding {

namespace {

double max_abs_col_sum(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return 0.0;
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

double max_abs_row_sum(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

void require_same_exponent(const Operator& A) {
  if (A.domain.exp != A.codomain.exp)
    throw config_error("operators between spaces with different exponents are not supported");
}

double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols,
                      const NumericPolicy& policy) {
  return policy.rank_tol_scale * static_cast<double>(std::max(rows, cols)) * sigma_max;
}

int rank_from_singular_values(const Eigen::VectorXd& sv, Eigen::Index rows,
                              Eigen::Index cols, const NumericPolicy& policy) {
  if (sv.size() == 0) return 0;
  const double tol = rank_threshold(sv(0), rows, cols, policy);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++r;
  return r;
}

// ||y||_p >= lower_factor(p, n) * ||y||_2 for y in R^n
double lp_over_l2_lower(const Exponent& p, int n) {
  const double invp = p.inverse();
  return invp >= 0.5 ? 1.0 : std::pow(static_cast<double>(n), invp - 0.5);
}

// ||y||_p <= upper_factor(p, n) * ||y||_2 for y in R^n
double lp_over_l2_upper(const Exponent& p, int n) {
  const double invp = p.inverse();
  return invp <= 0.5 ? 1.0 : std::pow(static_cast<double>(n), invp - 0.5);
}

}  // namespace

Operator::Operator(Eigen::MatrixXd matrix_, Space domain_, Space codomain_)
    : matrix(std::move(matrix_)), domain(domain_), codomain(codomain_) {
  if (matrix.rows() != codomain.dim || matrix.cols() != domain.dim)
    throw config_error("operator matrix shape does not match its spaces");
}

Operator::Operator(Eigen::MatrixXd matrix_, Space space_)
    : Operator(std::move(matrix_), space_, space_) {}

Operator Operator::identity(const Space& space) {
  return Operator(Eigen::MatrixXd::Identity(space.dim, space.dim), space);
}

Vec Operator::apply(const Vec& x) const {
  if (x.space != domain) throw config_error("vector is not in the operator's domain");
  return Vec(matrix * x.coords, codomain);
}

BoundInterval op_norm_bounds(const Operator& A, std::uint64_t seed,
                             const NumericPolicy& policy) {
  require_same_exponent(A);
  const Eigen::MatrixXd& M = A.matrix;
  const Exponent& p = A.domain.exp;

  if (p == Exponent::one()) return BoundInterval::exactly(max_abs_col_sum(M));
  if (p.is_inf()) return BoundInterval::exactly(max_abs_row_sum(M));
  if (p == Exponent::two()) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return BoundInterval::exactly(svd.singularValues()(0));
  }

  // interpolation between the endpoint norms gives a sound upper bound
  const double pv = p.value();
  const double n1 = max_abs_col_sum(M);
  const double ninf = max_abs_row_sum(M);
  const double upper = std::pow(n1, 1.0 / pv) * std::pow(ninf, 1.0 - 1.0 / pv);

  SphereObjective f = [&M, &p](const Eigen::VectorXd& x) {
    return lp_norm(M * x, p);
  };
  SphereGradient g = [&M, &p](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(M.transpose() * norm_subgradient(M * x, p));
  };
  SearchResult r = sphere_maximize(f, g, A.domain.dim, p, seed, policy,
                                   policy.search_starts);
  return {std::min(r.value, upper), upper, false};
}

BoundInterval min_gain_bounds(const Operator& A, std::uint64_t seed,
                              const NumericPolicy& policy) {
  require_same_exponent(A);
  const Eigen::MatrixXd& M = A.matrix;
  const Exponent& p = A.domain.exp;
  const Eigen::Index m = M.rows(), n = M.cols();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const int rank = rank_from_singular_values(sv, m, n, policy);
  if (rank < n) return BoundInterval::exactly(0.0);  // kernel vector

  const double smin = sv(sv.size() - 1);
  if (p == Exponent::two()) return BoundInterval::exactly(smin);

  double lower = 0.0;
  if (m == n) {
    // full rank established above: the gain is 1 / ||A^{-1}||
    const Eigen::MatrixXd inv = M.partialPivLu().inverse();
    if (p == Exponent::one()) {
      const double in1 = max_abs_col_sum(inv);
      return BoundInterval::exactly(in1 > 0.0 ? 1.0 / in1 : 0.0);
    }
    if (p.is_inf()) {
      const double ininf = max_abs_row_sum(inv);
      return BoundInterval::exactly(ininf > 0.0 ? 1.0 / ininf : 0.0);
    }
    const double pv = p.value();
    const double inv_upper = std::pow(max_abs_col_sum(inv), 1.0 / pv) *
                             std::pow(max_abs_row_sum(inv), 1.0 - 1.0 / pv);
    if (inv_upper > 0.0) lower = 1.0 / inv_upper;
  }

  // transfer of the l2 gain through the norm-equivalence constants; valid
  // for any shape and keeps the lower bound positive for full-rank A
  lower = std::max(lower, lp_over_l2_lower(p, static_cast<int>(m)) /
                              lp_over_l2_upper(p, static_cast<int>(n)) * smin);

  // upper side: canonical columns, the l2 minimizer, and a sphere search
  double upper = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < n; ++j)
    upper = std::min(upper, lp_norm(M.col(j), p));
  const Eigen::VectorXd v2 = svd.matrixV().col(svd.matrixV().cols() - 1);
  const double v2n = lp_norm(v2, p);
  if (v2n > 0.0) upper = std::min(upper, lp_norm(M * v2, p) / v2n);

  SphereObjective f = [&M, &p](const Eigen::VectorXd& x) {
    return lp_norm(M * x, p);
  };
  SphereGradient g = [&M, &p](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(M.transpose() * norm_subgradient(M * x, p));
  };
  SearchResult r = sphere_minimize(f, g, static_cast<int>(n), p, seed, policy,
                                   policy.search_starts);
  upper = std::min(upper, r.value);

  // the searched values are exact evaluations, so they dominate the bound
  lower = std::min(lower, upper);
  return {lower, upper, false};
}

int numeric_rank(const Eigen::MatrixXd& m, const NumericPolicy& policy) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return rank_from_singular_values(svd.singularValues(), m.rows(), m.cols(), policy);
}

int numeric_rank(const Operator& A, const NumericPolicy& policy) {
  return numeric_rank(A.matrix, policy);
}

SubspaceBasis kernel_basis(const Operator& A, const NumericPolicy& policy) {
  const Eigen::Index n = A.matrix.cols();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A.matrix, Eigen::ComputeFullV);
  const int r = rank_from_singular_values(svd.singularValues(), A.matrix.rows(),
                                          n, policy);
  return SubspaceBasis(svd.matrixV().rightCols(n - r), A.domain);
}

SubspaceBasis range_basis(const Operator& A, const NumericPolicy& policy) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A.matrix, Eigen::ComputeFullU);
  const int r = rank_from_singular_values(svd.singularValues(), A.matrix.rows(),
                                          A.matrix.cols(), policy);
  return SubspaceBasis(svd.matrixU().leftCols(r), A.codomain);
}

int codim(const SubspaceBasis& B, const Space& X, const NumericPolicy& policy) {
  if (B.space.dim != X.dim)
    throw config_error("basis vectors do not live in the given space");
  if (B.count() == 0) return X.dim;
  return X.dim - numeric_rank(B.vectors, policy);
}

Operator restrict_to(const Operator& A, const SubspaceBasis& Y,
                     const NumericPolicy& policy) {
  if (Y.space != A.domain)
    throw config_error("subspace does not live in the operator's domain");
  if (Y.count() == 0) throw config_error("cannot restrict to an empty basis");
  if (numeric_rank(Y.vectors, policy) < Y.count())
    throw config_error("degenerate subspace basis (numerically rank-deficient)");
  return Operator(A.matrix * Y.vectors, Space(Y.count(), A.domain.exp), A.codomain);
}

Operator embedding(const SubspaceBasis& Y) {
  if (Y.count() == 0) throw config_error("cannot embed an empty basis");
  return Operator(Y.vectors, Space(Y.count(), Y.space.exp), Y.space);
}

double restricted_norm_upper(const Operator& A, const SubspaceBasis& Y,
                             std::uint64_t seed, const NumericPolicy& policy) {
  require_same_exponent(A);
  if (Y.space != A.domain)
    throw config_error("subspace does not live in the operator's domain");
  if (numeric_rank(Y.vectors, policy) < Y.count())
    throw config_error("degenerate subspace basis (numerically rank-deficient)");
  const Exponent& p = A.domain.exp;
  const int n = A.domain.dim;
  const int m = A.codomain.dim;

  // sup over a subspace never exceeds the ambient norm
  double bound = op_norm_bounds(A, seed, policy).upper;

  // exact l2 value on the subspace via an orthonormal basis, transferred
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Y.vectors);
  const Eigen::MatrixXd Q =
      qr.householderQ() * Eigen::MatrixXd::Identity(Y.space.dim, Y.count());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A.matrix * Q);
  const double s2 = svd.singularValues()(0);
  if (p == Exponent::two()) return std::min(bound, s2);
  const double via_l2 = lp_over_l2_upper(p, m) * s2 / lp_over_l2_lower(p, n);
  return std::min(bound, via_l2);
}

double span_defect(const SubspaceBasis& B1, const SubspaceBasis& B2,
                   const NumericPolicy& policy) {
  if (B1.space.dim != B2.space.dim)
    throw config_error("bases live in different spaces");
  if (B1.count() == 0 && B2.count() == 0) return 0.0;
  if (B1.count() == 0 || B2.count() == 0)
    return std::numeric_limits<double>::infinity();
  double defect = 0.0;
  for (int j = 0; j < B1.count(); ++j) {
    const Eigen::VectorXd col = B1.vectors.col(j).normalized();
    defect = std::max(defect, subspace_distance(col, B2.vectors, policy));
  }
  for (int j = 0; j < B2.count(); ++j) {
    const Eigen::VectorXd col = B2.vectors.col(j).normalized();
    defect = std::max(defect, subspace_distance(col, B1.vectors, policy));
  }
  return defect;
}

bool spans_equal(const SubspaceBasis& B1, const SubspaceBasis& B2, double tol,
                 const NumericPolicy& policy) {
  if (B1.space.dim != B2.space.dim) return false;
  if (B1.count() == 0 && B2.count() == 0) return true;
  if (B1.count() == 0 || B2.count() == 0) return false;
  return span_defect(B1, B2, policy) <= tol;
}

}  // namespace hilding
