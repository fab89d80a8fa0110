#pragma once

#include <cstdint>

#include "mtc/lbra.hpp"
#include "mtc/params.hpp"

namespace mtc {

/// Inputs for one closed-form evaluation point. The geometry expectation is
/// realized by sampling `samples` independent (pair distance, cell areas,
/// member counts) draws; `window` supplies the gamma normalization that turns
/// a cell area into a relay budget, matching the simulator.
struct AnalyticPoint {
  RadioParams radio;
  SpectrumPlan plan;
  double lambda_d = 0.0;
  double lambda_g = 0.0;
  double window = 0.0;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
};

struct AnalyticResult {
  double epsilon = 0.0;   // outage probability
  double capacity = 0.0;  // lambda_d * (1 - epsilon)
  double p1 = 0.0;        // mean stay-path success under a receiving cell
  double p2 = 0.0;        // mean transferred-device success
  double p3 = 0.0;        // mean stay-path success under a donating cell
  double mean_pr_a1 = 0.0;
  double mean_k_change = 0.0;
  std::uint64_t clamp_events = 0;
};

/// Pr{k_i >= k0} for k_i ~ Poisson(lambda_d * area_i): the upper Poisson tail
/// via the regularized incomplete gamma.
double prob_transfer_in(double lambda_d, double area_i, std::uint64_t k0);

/// Pr{k_i < k0}: complement of the tail (strict inequality, so the two sum
/// to one exactly).
double prob_transfer_out(double lambda_d, double area_i, std::uint64_t k0);

/// Capture probability at link distance r against the channel-thinned
/// interferer field: exp(-pi*(lambda_d/u1)*eta^(2/alpha)*K_alpha*r^2).
double capture_conditional(double r, double lambda_d, std::uint32_t u1,
                           const RadioParams& radio);

/// Distance-averaged capture probability of a nearest-associated device.
double p_c_in_v(double lambda_d, std::uint32_t u1, double lambda_g,
                const RadioParams& radio);

/// Distance-averaged capture for a device transferred across a gateway pair
/// at separation d (the average starts at d/2 instead of zero).
double p_c_in_t(double lambda_d, std::uint32_t u1, double lambda_g,
                const RadioParams& radio, double d);

/// Capture seen by a donating cell: p_c_in_v scaled by the staying fraction.
/// k0 must be positive.
double p_c_out(double lambda_d, std::uint32_t u1, double lambda_g,
               const RadioParams& radio, std::uint64_t k0,
               std::uint64_t k_change);

/// min(1, u2/(k_c*p_c)); 1 when k_c*p_c is zero (nothing competes).
double relay_success(std::uint32_t u2, double k_c, double p_c);

/// Mean event-path success probabilities (p1,p2,p3) over the sampled
/// geometry, per policy.
AnalyticResult end_to_end_success(const AnalyticPoint& point, Policy policy);

/// Outage and transmission capacity at the point: epsilon =
/// 1 - E[clamp(p1+p2+p3, 0, 1)], capacity = lambda_d*(1-epsilon).
AnalyticResult outage(const AnalyticPoint& point, Policy policy);

}  // namespace mtc
