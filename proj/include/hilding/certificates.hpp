#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "hilding/operators.hpp"

namespace hilding {

// The pair (lambda1, lambda2) of the two-parameter perturbation inequality
//
//   ||Sx - Tx|| <= lambda1 ||Sx|| + lambda2 ||Tx||   for all x,
//
// with S = I giving the classical one-operator form. Both constants must be
// strictly below 1; at 1 the inequality stops carrying invertibility content.
struct HildingCertificate {
  double lambda1;
  double lambda2;

  HildingCertificate(double lambda1, double lambda2);
  double max_lambda() const { return std::max(lambda1, lambda2); }
};

// Two-sided norm equivalence implied by a certificate:
//   lower * ||y|| <= ||x|| <= upper * ||y||  whenever
//   ||x - y|| <= lambda1 ||x|| + lambda2 ||y||.
struct SandwichBounds {
  double lower;  // (1 - lambda2) / (1 + lambda1)
  double upper;  // (1 + lambda2) / (1 - lambda1)
};

enum class VerdictStatus { Verified, Refuted, Inconclusive };
const char* to_string(VerdictStatus s);

// Verified  -> a sound norm-comparison argument covers every x.
// Refuted   -> witness strictly violates the inequality.
// Inconclusive -> neither; margin records the best violation found (<= 0
//                 means no violation was seen).
struct Verdict {
  VerdictStatus status;
  std::optional<Vec> witness;  // present iff Refuted
  double margin;

  bool verified() const { return status == VerdictStatus::Verified; }
};

class certificate_not_verified : public std::runtime_error {
 public:
  certificate_not_verified(const std::string& msg, Verdict v)
      : std::runtime_error(msg), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

SandwichBounds basic_bounds(const HildingCertificate& c);

// Lower bound on sup ||Sx - Tx|| / (||Sx|| + ||Tx||) by multi-start sphere
// search including canonical directions. The ratio at points with
// Sx = Tx = 0 counts as 0. A value below 1 is necessary for any symmetric
// certificate; no global optimality is claimed away from closed-form cases.
double fit_lambda(const Operator& S, const Operator& T, std::uint64_t seed = 0,
                  int starts = -1, const NumericPolicy& policy = {});

// Verified only via the sound route
//   upper(||S - T||) <= lambda1 * lower(gain S) + lambda2 * lower(gain T),
// which implies the pointwise inequality for every x (the domain norm
// cancels). When both gains vanish but the kernels of S and T span the same
// subspace, the same comparison on a complement of the common kernel is
// equally sound and is tried next. Refuted needs an explicit witness with
// violation beyond refute_tol * (||Sx|| + ||Tx||). Sampling success alone
// never verifies.
Verdict verify_certificate(const Operator& S, const Operator& T,
                           const HildingCertificate& c, std::uint64_t seed = 0,
                           const NumericPolicy& policy = {});

// certificate for T^{-1}: the constants swap
HildingCertificate cert_inverse(const HildingCertificate& c);

// certificate for alpha*T, alpha > 0. For alpha <= 1 the first constant
// becomes 1 - alpha*(1 - lambda1); for alpha > 1 the second becomes
// (lambda2 + alpha - 1)/alpha. Constants never decrease.
HildingCertificate cert_scale(const HildingCertificate& c, double alpha);

// certificate for (1-alpha)I + alpha*T, 0 <= alpha <= 1:
// (alpha*lambda1 + (1-alpha)*lambda2, lambda2)
HildingCertificate cert_homotopy(const HildingCertificate& c, double alpha);

// Certified lower bound on inf ||(aI - T)x|| / ||x|| for a < 0, via the
// factorization aI - T = -(|a|+1) [ (1 - 1/(|a|+1)) I + (1/(|a|+1)) T ].
// Always strictly positive.
double ray_gain(const HildingCertificate& c, double a);

// Smallest delta in [lambda, 1) with ||T|| <= (delta - lambda)/(1 - delta):
// delta = (lambda + ||T||) / (1 + ||T||). Under
// ||x - Tx|| <= lambda ||x|| + ||Tx|| it yields the symmetric inequality
// ||x - Tx|| <= delta (||x|| + ||Tx||).
double repair_bounded(double lambda, double norm_upper);

// Mirror image for ||x - Tx|| <= ||x|| + lambda ||Tx|| with bounded inverse:
// delta = (lambda + ||T^{-1}||) / (1 + ||T^{-1}||), the smallest delta with
// ||T^{-1}|| <= (delta - lambda)/(1 - delta).
double repair_inverse_bounded(double lambda, double inverse_norm_upper);

}  // namespace hilding
