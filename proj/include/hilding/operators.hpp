#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>

#include "hilding/lp.hpp"
#include "hilding/policy.hpp"

namespace hilding {

// Dense linear operator between two coordinate spaces.
// rows = codomain dim, cols = domain dim.
struct Operator {
  Eigen::MatrixXd matrix;
  Space domain;
  Space codomain;

  Operator(Eigen::MatrixXd matrix, Space domain, Space codomain);
  Operator(Eigen::MatrixXd matrix, Space space);  // endomorphism
  static Operator identity(const Space& space);

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return matrix * x; }
  Vec apply(const Vec& x) const;
  bool is_endomorphism() const { return domain == codomain; }
};

// Sound enclosure of a nonnegative quantity. exact means lower == upper and
// the value comes from a closed form, not a search.
struct BoundInterval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool exact = false;

  static BoundInterval exactly(double v) { return {v, v, true}; }
};

// Enclosure of the lp->lp operator norm. Closed forms for p in {1, 2, inf};
// otherwise an interpolation upper bound and a multi-start search lower bound
// (canonical directions always evaluated). Mixed exponents are rejected.
BoundInterval op_norm_bounds(const Operator& A, std::uint64_t seed = 0,
                             const NumericPolicy& policy = {});

// Enclosure of inf ||Ax||/||x||. [0,0] for rank-deficient A; smallest
// singular value at p = 2; 1/||A^{-1}|| for square invertible A at p in
// {1, inf}; otherwise an l2-transfer lower bound and a search upper bound.
BoundInterval min_gain_bounds(const Operator& A, std::uint64_t seed = 0,
                              const NumericPolicy& policy = {});

int numeric_rank(const Eigen::MatrixXd& m, const NumericPolicy& policy = {});
int numeric_rank(const Operator& A, const NumericPolicy& policy = {});

SubspaceBasis kernel_basis(const Operator& A, const NumericPolicy& policy = {});
SubspaceBasis range_basis(const Operator& A, const NumericPolicy& policy = {});

int codim(const SubspaceBasis& B, const Space& X, const NumericPolicy& policy = {});

// A restricted to span(Y): the columns of Y become the domain's coordinate
// axes, with the ambient exponent pushed through. Compose with embedding(Y)
// for ambient-norm statements.
Operator restrict_to(const Operator& A, const SubspaceBasis& Y,
                     const NumericPolicy& policy = {});

// the inclusion span(Y) -> ambient, i.e. the basis matrix as an operator
Operator embedding(const SubspaceBasis& Y);

// Sound upper bound for sup ||Ax||/||x|| over nonzero x in span(Y), both
// norms ambient: the smaller of the ambient norm bound and an l2-exact
// subspace norm transferred through the lp/l2 equivalence constants.
double restricted_norm_upper(const Operator& A, const SubspaceBasis& Y,
                             std::uint64_t seed = 0,
                             const NumericPolicy& policy = {});

// max over unit vectors of span equality defect: every unit column of one
// basis must be within tol of the other span, both ways
bool spans_equal(const SubspaceBasis& B1, const SubspaceBasis& B2, double tol,
                 const NumericPolicy& policy = {});

// largest mutual-membership defect between the two spans (0 when both empty)
double span_defect(const SubspaceBasis& B1, const SubspaceBasis& B2,
                   const NumericPolicy& policy = {});

}  // namespace hilding
