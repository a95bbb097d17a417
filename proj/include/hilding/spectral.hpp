#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "hilding/certificates.hpp"
#include "hilding/operators.hpp"

namespace hilding {

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;  // dim entries, multiplicity
  std::vector<double> residuals;  // sigma_min(T - lambda I) per eigenvalue
};

// All eigenvalues via Hessenberg reduction and shifted QR iteration in
// complex arithmetic (Wilkinson-style shift, exceptional shifts on stalls,
// 30*dim iteration cap). Real input, complex output. dim <= 64.
SpectrumReport spectrum(const Operator& T, const NumericPolicy& policy = {});

// Unit vector nearly annihilated by T - lambda I. exact means the closed-form
// p = 2 minimizer (smallest singular vector); otherwise the residual is only
// an upper bound on the true infimum.
struct ApproxWitness {
  std::complex<double> lambda;
  Vec x;            // unit in the space's norm
  double residual;  // ||(T - lambda I) x||
  bool exact;
};

ApproxWitness aps_residual(const Operator& T, double lambda,
                           std::uint64_t seed = 0,
                           const NumericPolicy& policy = {});

// residuals at lambda = 1 and lambda = -1; bounded away from 0 they refute
// approximate fixed (resp. antipodal) points at this finite scale
ApproxWitness fixed_point_gap(const Operator& T, std::uint64_t seed = 0,
                              const NumericPolicy& policy = {});
ApproxWitness antipodal_gap(const Operator& T, std::uint64_t seed = 0,
                            const NumericPolicy& policy = {});

enum class RayDirection { Positive, Negative };

struct RayScanEntry {
  double alpha;
  BoundInterval gain;           // min gain of alpha I - T
  bool invertible;              // numeric rank full
  std::optional<double> certified_gain;  // from ray_gain when a certificate is given
  bool consistent;              // measured gain does not fall below certified
};

struct RayScanReport {
  RayDirection direction;
  std::vector<RayScanEntry> entries;
  bool all_invertible;
  bool consistent;
};

// Gain and invertibility of alpha I - T along a one-signed grid. With a
// certificate and the negative direction, every entry is cross-checked
// against the certified ray gain. Only real rays are scanned; complex-unit
// rays would need complex operator input.
RayScanReport ray_scan(const Operator& T, RayDirection direction,
                       const std::vector<double>& grid,
                       const std::optional<HildingCertificate>& cert = {},
                       std::uint64_t seed = 0, const NumericPolicy& policy = {});

}  // namespace hilding
