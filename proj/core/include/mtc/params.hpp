#pragma once

#include <cstdint>

namespace mtc {

/// Decibels to linear power ratio, 10^(x/10). Throws on non-finite input.
double db_to_linear(double x_db);

/// Propagation constant K(alpha) = integral over t in (0,inf) of
/// 1/(1+t^(alpha/2)) dt, evaluated by tanh-sinh quadrature after the
/// substitution t = u/(1-u). Requires alpha > 2 (divergent otherwise).
double compute_k_alpha(double alpha);

/// SIR threshold and path loss. Thresholds enter in dB at the configuration
/// boundary only; everything downstream uses the linear value.
struct RadioParams {
  double eta_db;
  double eta;      // linear threshold
  double alpha;    // path loss exponent, > 2
  double k_alpha;  // cached propagation constant

  static RadioParams from_db(double eta_db, double alpha);
};

/// Resource-block budgets for the two hops. u1 is the derived number of
/// device-to-gateway data channels.
struct SpectrumPlan {
  std::uint32_t r1;
  std::uint32_t r2;
  std::uint32_t omega1;
  std::uint32_t omega2;
  std::uint32_t u1;

  static SpectrumPlan make(std::uint32_t r1, std::uint32_t r2,
                           std::uint32_t omega1, std::uint32_t omega2);
};

std::uint32_t channel_count(const SpectrumPlan& plan);

/// floor(gamma_i * r2 / omega2): relay packet budget granted to one gateway.
/// gamma_i must lie in [0,1].
std::uint32_t relay_budget(double gamma_i, const SpectrumPlan& plan);

/// Densities and simulation window. Lengths are dimensionless; only the
/// products lambda*L^2 and the ratio lambda_d/lambda_g carry meaning.
struct DeploymentParams {
  double lambda_d;
  double lambda_g;
  double window;
  std::uint64_t base_seed;

  static DeploymentParams make(double lambda_d, double lambda_g, double window,
                               std::uint64_t base_seed);
};

}  // namespace mtc
