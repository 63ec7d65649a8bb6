#pragma once

#include <vector>

#include "powctl/env.hpp"
#include "powctl/rng.hpp"

namespace powctl {

struct WmmseConfig {
  int max_iter = 100;
  double rel_tol = 1e-6;
  void validate() const;
};

struct SolveTrace {
  std::vector<double> objective_per_iter;  // Shannon sum rate after each iteration
  int iterations_used = 0;
  bool converged = false;
};

// Scalar SISO weighted-MMSE block ascent for the sum-rate problem. Amplitudes
// start at full power; each iteration updates receivers u, weights w and
// amplitudes v in turn, with v clamped to [0, sqrt(p_max)].
std::pair<std::vector<double>, SolveTrace> wmmse_solve(const ChannelMatrix& H, double sigma2,
                                                       double p_max, const WmmseConfig& cfg = {});

// Exhaustive search over the uniform grid {0, .., p_max}^K with
// points_per_dim levels per axis. Rejects K > 3.
std::vector<double> grid_search_oracle(const ChannelMatrix& H, double sigma2, double p_max,
                                       int points_per_dim);

// Each component uniform on [0, p_max].
std::vector<double> random_policy(int K, double p_max, RandomStream& rng);

}  // namespace powctl
