#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "hilding/errors.hpp"
#include "hilding/policy.hpp"

namespace hilding {

// Exponent p in [1, inf]. Infinity is a tagged case, never a large float,
// so sup-norm formulas stay exact.
class Exponent {
 public:
  static Exponent finite(double p);
  static Exponent inf() { return Exponent(0.0, true); }
  static Exponent one() { return Exponent(1.0, false); }
  static Exponent two() { return Exponent(2.0, false); }

  bool is_inf() const { return inf_; }

  // finite value; rejects the infinite tag
  double value() const;

  // 1/p + 1/q = 1
  Exponent dual() const;

  // 1/p, with 0 for the sup norm
  double inverse() const { return inf_ ? 0.0 : 1.0 / p_; }

  bool operator==(const Exponent& o) const {
    return inf_ == o.inf_ && (inf_ || p_ == o.p_);
  }
  bool operator!=(const Exponent& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Exponent(double p, bool is_inf) : p_(p), inf_(is_inf) {}
  double p_;
  bool inf_;
};

// "1", "2", "1.5" or "inf"
Exponent parse_exponent(const std::string& text);

struct Space {
  int dim;
  Exponent exp;

  Space(int dim, Exponent exp);
  bool operator==(const Space& o) const { return dim == o.dim && exp == o.exp; }
  bool operator!=(const Space& o) const { return !(*this == o); }
};

struct Vec {
  Eigen::VectorXd coords;
  Space space;

  Vec(Eigen::VectorXd coords, Space space);
};

// Basis vectors are the columns. Independence is not assumed here; the
// operations that need it check against the rank tolerance and reject
// degenerate bases.
struct SubspaceBasis {
  Eigen::MatrixXd vectors;
  Space space;

  SubspaceBasis(Eigen::MatrixXd vectors, Space space);
  int count() const { return static_cast<int>(vectors.cols()); }
  static SubspaceBasis from_vecs(const std::vector<Vec>& vs);
};

double lp_norm(const Eigen::VectorXd& x, const Exponent& p);
double vec_norm(const Vec& x);

// x scaled to unit p-norm; the zero vector is rejected
Eigen::VectorXd lp_normalize(const Eigen::VectorXd& x, const Exponent& p);

// Deterministic unit-sphere sample: the +-e_i directions first (all of them
// whenever count >= 2*dim), then seeded gaussian directions, everything
// normalized in the space's norm.
std::vector<Vec> sphere_sample(const Space& space, int count, std::uint64_t seed);
std::vector<Eigen::VectorXd> sphere_sample_coords(int dim, const Exponent& p,
                                                  int count, std::uint64_t seed);

// Euclidean distance from x to span(B), by least squares. Membership in a
// finite-dimensional span does not depend on the norm, so the l2 distance is
// used for membership tests at every exponent. Rejects degenerate bases.
double subspace_distance(const Vec& x, const SubspaceBasis& B,
                         const NumericPolicy& policy = {});
double subspace_distance(const Eigen::VectorXd& x, const Eigen::MatrixXd& basis,
                         const NumericPolicy& policy = {});

}  // namespace hilding
