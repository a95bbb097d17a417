#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>

#include "hilding/lp.hpp"
#include "hilding/policy.hpp"

namespace hilding {

struct SearchResult {
  double value = 0.0;
  Eigen::VectorXd point;
};

using SphereObjective = std::function<double(const Eigen::VectorXd&)>;
using SphereGradient = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Deterministic multi-start optimization over the unit p-sphere: projected
// (sub)gradient descent per start with step halving on non-improvement,
// canonical directions always among the starts, then a compass polish of the
// winner. Ties go to the lowest start index, so the result does not depend
// on evaluation order.
SearchResult sphere_minimize(const SphereObjective& f, const SphereGradient& g,
                             int dim, const Exponent& p, std::uint64_t seed,
                             const NumericPolicy& policy, int starts = -1);

SearchResult sphere_maximize(const SphereObjective& f, const SphereGradient& g,
                             int dim, const Exponent& p, std::uint64_t seed,
                             const NumericPolicy& policy, int starts = -1);

// subgradient of y -> ||y||_p (zero at y = 0)
Eigen::VectorXd norm_subgradient(const Eigen::VectorXd& y, const Exponent& p);

}  // namespace hilding
