#include "hilding/search.hpp"

#include <cmath>
#include <limits>

namespace hilding {

Eigen::VectorXd norm_subgradient(const Eigen::VectorXd& y, const Exponent& p) {
  const Eigen::Index n = y.size();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  if (p.is_inf()) {
    Eigen::Index k = 0;
    const double m = y.cwiseAbs().maxCoeff(&k);
    if (m > 0.0) g(k) = y(k) > 0.0 ? 1.0 : -1.0;
    return g;
  }
  const double pv = p.value();
  if (pv == 1.0) {
    for (Eigen::Index i = 0; i < n; ++i)
      g(i) = (y(i) > 0.0) ? 1.0 : (y(i) < 0.0 ? -1.0 : 0.0);
    return g;
  }
  const double norm = lp_norm(y, p);
  if (norm == 0.0) return g;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = std::pow(std::abs(y(i)) / norm, pv - 1.0);
    g(i) = y(i) >= 0.0 ? t : -t;
  }
  return g;
}

namespace {

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd point;
};

Candidate descend(const SphereObjective& f, const SphereGradient& g,
                  Eigen::VectorXd x, const Exponent& p,
                  const NumericPolicy& pol) {
  double fx = f(x);
  double step = 1.0;
  for (int iter = 0; iter < pol.search_max_iter; ++iter) {
    if (!g) break;
    Eigen::VectorXd dir = g(x);
    const double dn = dir.norm();
    if (dir.size() == 0 || dn == 0.0 || !std::isfinite(dn)) break;
    dir /= dn;
    Eigen::VectorXd cand = x - step * dir;
    const double cn = lp_norm(cand, p);
    if (cn < 1e-300) {
      step *= 0.5;
      continue;
    }
    cand /= cn;
    const double fc = f(cand);
    if (fc < fx) {
      const double rel = (fx - fc) / std::max(std::abs(fx), 1e-30);
      x = std::move(cand);
      fx = fc;
      if (rel < pol.search_rel_tol) break;
      step = std::min(step * 1.5, 1.0);
    } else {
      step *= 0.5;
      if (step < 1e-15) break;
    }
  }
  return {fx, std::move(x)};
}

// compass polish: the gradient phase can stall at kinks of the piecewise
// objectives, axis moves with a shrinking step do not
void polish(const SphereObjective& f, Candidate& best, const Exponent& p,
            const NumericPolicy& pol) {
  const Eigen::Index n = best.point.size();
  double step = 0.125;
  for (int sweep = 0; sweep < pol.polish_sweeps; ++sweep) {
    bool improved = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (int s = 0; s < 2; ++s) {
        Eigen::VectorXd cand = best.point;
        cand(i) += s == 0 ? step : -step;
        const double cn = lp_norm(cand, p);
        if (cn < 1e-300) continue;
        cand /= cn;
        const double fc = f(cand);
        if (fc < best.value) {
          best.value = fc;
          best.point = std::move(cand);
          improved = true;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < 1e-13) break;
    }
  }
}

}  // namespace

SearchResult sphere_minimize(const SphereObjective& f, const SphereGradient& g,
                             int dim, const Exponent& p, std::uint64_t seed,
                             const NumericPolicy& policy, int starts) {
  if (starts <= 0) starts = policy.search_starts;
  const int count = std::max(starts, 2 * dim);  // canonical directions included
  Candidate best;
  for (auto& s : sphere_sample_coords(dim, p, count, seed)) {
    Candidate c = descend(f, g, std::move(s), p, policy);
    if (c.value < best.value) best = std::move(c);  // strict: first index wins
  }
  polish(f, best, p, policy);
  return {best.value, std::move(best.point)};
}

SearchResult sphere_maximize(const SphereObjective& f, const SphereGradient& g,
                             int dim, const Exponent& p, std::uint64_t seed,
                             const NumericPolicy& policy, int starts) {
  SphereObjective nf = [&f](const Eigen::VectorXd& x) { return -f(x); };
  SphereGradient ng;
  if (g)
    ng = [&g](const Eigen::VectorXd& x) { return Eigen::VectorXd(-g(x)); };
  SearchResult r = sphere_minimize(nf, ng, dim, p, seed, policy, starts);
  return {-r.value, std::move(r.point)};
}

}  // namespace hilding
