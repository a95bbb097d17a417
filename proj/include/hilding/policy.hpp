#pragma once

namespace hilding {

// Numeric policy shared by every module. Checks that need a tolerance or a
// sample count take one of these explicitly; the defaults are the documented
// values and every CLI report echoes the policy it ran with.
struct NumericPolicy {
  // singular values above rank_tol_scale * max(m,n) * sigma_max count as rank
  double rank_tol_scale = 1e-10;

  // multi-start sphere searches
  int search_starts = 64;
  int search_max_iter = 10000;
  double search_rel_tol = 1e-12;
  int polish_sweeps = 200;

  // sphere samples per continuation step (canonical directions are added)
  int path_samples = 256;

  double unit_norm_tol = 1e-14;
  double refute_tol = 1e-12;
  double consistency_tol = 1e-9;
  double span_tol = 1e-8;

  // eigenvalue iteration
  int spectrum_max_dim = 64;
  double deflation_tol = 1e-14;
  int qr_iters_per_eigenvalue = 30;

  long neumann_max_terms = 1000000;
  long max_path_steps = 100000;
};

}  // namespace hilding
