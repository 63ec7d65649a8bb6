#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powctl/env.hpp"

namespace powctl {

enum class ObjectiveKind : std::uint8_t { ShannonSumRate = 0, FiniteBlocklength = 1 };

// Reward function. The finite-blocklength variant caches Q^{-1}(eps) at
// construction since it is fixed for the lifetime of the objective.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::ShannonSumRate;
  double block_bits = 0.0;   // M
  double error_prob = 0.0;   // eps
  double qinv_eps = 0.0;

  static Objective shannon();
  static Objective finite_blocklength(double bits, double eps);

  double reward(const std::vector<double>& sinr) const;
  bool operator==(const Objective&) const = default;
};

// SINR_k = h_kk p_k / (sigma2 + sum_{j != k} h_jk p_j)
std::vector<double> compute_sinr(const ChannelMatrix& H, const std::vector<double>& p, double sigma2);

// sum_k log2(1 + SINR_k), bits/s/Hz
double shannon_sum_rate(const std::vector<double>& sinr);

// Gaussian tail Q(x) and its inverse. The inverse bisects on an erfc-based
// evaluation; |Q(x) - eps| / eps <= 1e-10 over the supported range.
double gaussian_q(double x);
double inverse_gaussian_q(double eps);

// Normal-approximation achievable sum rate for packets of M bits at decoding
// error eps: per link log2(1+SINR) - (1/ln2) sqrt(V/M) Q^{-1}(eps) with
// dispersion V = 1 - (1+SINR)^{-2}, clamped below at zero.
double finite_blocklength_sum_rate(const std::vector<double>& sinr, double block_bits, double error_prob);
double finite_blocklength_sum_rate_with_qinv(const std::vector<double>& sinr, double block_bits, double qinv_eps);

double channel_dispersion(double sinr);

}  // namespace powctl
