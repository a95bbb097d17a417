#pragma once

#include <cstdint>

#include "hilding/certificates.hpp"
#include "hilding/operators.hpp"

namespace hilding {

// Partial geometric series for T^{-1}: sum of (I-T)^k for k <= terms_used,
// with the a-priori tail bound error_bound = q^(terms_used+1) / (1-q).
struct NeumannResult {
  Operator approx_inverse;
  long terms_used;
  double q;            // sound upper bound on ||I - T||
  double error_bound;  // ||T^{-1} - approx_inverse|| <= error_bound
};

// Requires a soundly established q = upper(||I - T||) < 1; otherwise raises
// numeric_error suggesting a certificate-based check instead. terms_used is
// minimal for the requested tolerance.
NeumannResult neumann_inverse(const Operator& T, double tol,
                              std::uint64_t seed = 0,
                              const NumericPolicy& policy = {});

// Same series applied to one right-hand side, never forming the inverse:
// ||result - T^{-1} b|| <= tol * ||b||.
Vec neumann_solve(const Operator& T, const Vec& b, double tol,
                  std::uint64_t seed = 0, const NumericPolicy& policy = {});

struct SurjectivityReport {
  Verdict certificate_verdict;
  int rank;
  int codomain_dim;
  bool surjective;           // rank == codomain_dim
  double gain_floor;         // (1 - lambda1) / (1 + lambda2)
  BoundInterval min_gain;
  bool gain_consistent;      // floor below the measured gain, up to tolerance
};

// Certified surjectivity: refuses unless verify_certificate(I, T, c) is
// Verified, then confirms full rank and cross-checks the certificate's gain
// floor against min_gain_bounds.
SurjectivityReport certified_surjective(const Operator& T,
                                        const HildingCertificate& c,
                                        std::uint64_t seed = 0,
                                        const NumericPolicy& policy = {});

}  // namespace hilding
