#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilding/operators.hpp"

namespace hilding {

struct GalleryClaim {
  std::string description;
  bool pass;
  double measured;
};

// A named construction together with machine-checked claims. Every claim
// carries the measured value; there are no unchecked prose claims.
struct GalleryInstance {
  std::string name;
  std::map<std::string, Operator> operators;
  std::vector<GalleryClaim> claims;

  bool all_pass() const;
};

// rotation (a1,a2) -> (a2,-a1) on the 2-dimensional l1 space: an onto
// isometry whose fitted symmetric constant is exactly 1, so no certificate
// below 1 exists, yet fixed and antipodal gaps are 1.
GalleryInstance rotation_l1(std::uint64_t seed = 0, const NumericPolicy& policy = {});

// block-diagonal copies of that rotation on lp^(2m): onto isometry for every
// p, gaps bounded away from 0 (exactly sqrt(2) at p = 2), every real ray
// alpha I - T invertible, spectrum {i, -i} with multiplicity m.
GalleryInstance block_rotation(int m, const Exponent& p, std::uint64_t seed = 0,
                               const NumericPolicy& policy = {});

// lower shift on l2^n with the uniform witness x = n^{-1/2}(1,...,1):
// ||x - Sx|| = n^{-1/2}, the truncation view of the approximate-fixed-point
// sequence of the infinite shift isometry (asymptotic claim, labeled so).
GalleryInstance truncated_shift(int n, std::uint64_t seed = 0,
                                const NumericPolicy& policy = {});

// diag(1..n): satisfies ||(I-T)x|| <= ||Tx|| pointwise, the degenerate
// boundary case; fitted symmetric constants and repaired deltas approach 1
// as n grows.
GalleryInstance diagonal_growth(int n, const Exponent& p, std::uint64_t seed = 0,
                                const NumericPolicy& policy = {});

// X = lp^m (+) lp^m with the p-sum norm, Y the first-block span, Z the graph
// span {(a, a/K)}, T: Y -> Z the graph map, P the projection onto Z.
// Checks ||(I-T)|_Y|| = 1/K < 1, P^2 = P with range Z, T an isomorphism of
// Y onto Z, and both codimensions equal to m. K below 2 violates the norm
// condition and is rejected with the measured ratio.
GalleryInstance example10(int m, const Exponent& p, double K,
                          std::uint64_t seed = 0, const NumericPolicy& policy = {});

// CLI dispatcher; names: rotation_l1, block_rotation, truncated_shift,
// diagonal_growth, example10
struct GalleryParams {
  int m = 4;
  int n = 100;
  Exponent p = Exponent::two();
  double K = 2.0;
};
GalleryInstance make_gallery(const std::string& name, const GalleryParams& params,
                             std::uint64_t seed = 0, const NumericPolicy& policy = {});
std::vector<std::string> gallery_names();

}  // namespace hilding
