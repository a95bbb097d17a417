#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hilding/certificates.hpp"
#include "hilding/operators.hpp"

namespace hilding {

struct ContinuationStep {
  double alpha;
  int rank;
  int codim;
  // max over samples of ||(T_a - T_b)x|| / ||T_a x|| against the previous
  // step; must stay below 1/2 for the inverse-side transfer to apply
  double step_gap_bound;
  // min over samples of ||T_a x|| / ||x||
  double min_gain_ratio;
};

// Record of one certified walk from the identity to T along
// T_alpha = (1-alpha) I + alpha T, restricted to a subspace.
struct ContinuationTrace {
  double lambda;      // max(lambda1, lambda2)
  double gain_floor;  // (1 - lambda) / (1 + lambda)
  double epsilon;     // step bound
  double norm_upper;  // bound on the restricted operator norm used for epsilon
  std::vector<ContinuationStep> steps;
  int codim_start;    // codim of the subspace
  int codim_end;      // codim of its image under T
  bool preserved;     // always true for a returned trace
};

// epsilon = (1/2) * (1-lambda)/(1+lambda) * 1/(1 + norm_upper)
double epsilon_step(double lambda, double norm_upper);

// Walks T_alpha from the embedding of Y to T restricted to Y in steps of at
// most epsilon_step, checking at every step: the certified gain floor on
// sampled sphere points, the step perturbation bound (and the implied
// contraction condition), and the rank of the image. Succeeds iff the rank
// never moves, which yields the codimension identity as integers. Refuses
// when the certificate does not verify on the restriction; a rank jump is
// reported as a numeric_error naming the offending step.
ContinuationTrace verify_codim_preservation(const SubspaceBasis& Y,
                                            const Operator& T,
                                            const HildingCertificate& c,
                                            std::uint64_t seed = 0,
                                            const NumericPolicy& policy = {});

// Codimensions of range(S) and range(T) under a symmetric certificate:
// requires fit_lambda(S,T) <= lambda < 1 (refuses with the witness
// otherwise) and asserts the two codimensions agree.
std::pair<int, int> codim_pair(const Operator& S, const Operator& T,
                               double lambda, std::uint64_t seed = 0,
                               const NumericPolicy& policy = {});

struct FredholmReport {
  int kernel_dim_S, range_codim_S, index_S;
  int kernel_dim_T, range_codim_T, index_T;
  bool kernels_match;      // same span, both directions
  double kernel_defect;    // largest mutual-membership distance
  bool index_equal;
  // dim domain - dim codomain; the index always equals this by rank-nullity
  int rank_nullity_index;
};

// Kernel dimensions, range codimensions and indices for a certified pair;
// refuses unless the certificate verifies.
FredholmReport fredholm_check(const Operator& S, const Operator& T,
                              const HildingCertificate& c,
                              std::uint64_t seed = 0,
                              const NumericPolicy& policy = {});

// Distance from x to span{T^k x : n <= k <= K} for a certified T (symmetric
// form with lambda = max of the certificate constants). Requires K >= n.
double krylov_membership(const Operator& T, const HildingCertificate& c,
                         const Vec& x, int n, int K, std::uint64_t seed = 0,
                         const NumericPolicy& policy = {});

}  // namespace hilding
