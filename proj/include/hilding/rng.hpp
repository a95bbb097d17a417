#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace hilding {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// the double mappings below avoid std::*_distribution, whose sequences are
// implementation-defined and would break byte-reproducible reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller
  double gaussian();

  Eigen::VectorXd gaussian_vector(Eigen::Index n);
  Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hilding
