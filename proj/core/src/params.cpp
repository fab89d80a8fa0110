#include "mtc/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mtc/quadrature.hpp"

namespace mtc {

double db_to_linear(double x_db) {
  if (!std::isfinite(x_db))
    throw std::invalid_argument("db_to_linear: non-finite dB value");
  return std::pow(10.0, x_db / 10.0);
}

double compute_k_alpha(double alpha) {
  if (!(alpha > 2.0))
    throw std::invalid_argument(
        "compute_k_alpha: integral diverges for alpha <= 2 (got " +
        std::to_string(alpha) + ")");
  const double p = alpha / 2.0;
  // After t = u/(1-u): integrand 1/((1+t^p)(1-u)^2), rewritten with numerator
  // and denominator scaled by (1-u)^p so the u->1 endpoint stays finite in
  // floating point for p < 2.
  return integrate_unit([p](double u, double omu) {
    return std::pow(omu, p - 2.0) / (std::pow(omu, p) + std::pow(u, p));
  });
}

RadioParams RadioParams::from_db(double eta_db, double alpha) {
  RadioParams r;
  r.eta_db = eta_db;
  r.eta = db_to_linear(eta_db);
  r.alpha = alpha;
  r.k_alpha = compute_k_alpha(alpha);
  return r;
}

SpectrumPlan SpectrumPlan::make(std::uint32_t r1, std::uint32_t r2,
                                std::uint32_t omega1, std::uint32_t omega2) {
  if (r1 == 0 || r2 == 0 || omega1 == 0 || omega2 == 0)
    throw std::invalid_argument("SpectrumPlan: all budgets must be positive");
  SpectrumPlan p{r1, r2, omega1, omega2, r1 / omega1};
  if (p.u1 < 1)
    throw std::invalid_argument(
        "SpectrumPlan: r1/omega1 yields no usable data channel");
  return p;
}

std::uint32_t channel_count(const SpectrumPlan& plan) { return plan.u1; }

std::uint32_t relay_budget(double gamma_i, const SpectrumPlan& plan) {
  if (!(gamma_i >= 0.0 && gamma_i <= 1.0))
    throw std::invalid_argument("relay_budget: gamma outside [0,1]");
  return static_cast<std::uint32_t>(
      std::floor(gamma_i * static_cast<double>(plan.r2) / plan.omega2));
}

DeploymentParams DeploymentParams::make(double lambda_d, double lambda_g,
                                        double window,
                                        std::uint64_t base_seed) {
  if (!(lambda_d > 0.0) || !(lambda_g > 0.0) || !(window > 0.0))
    throw std::invalid_argument(
        "DeploymentParams: densities and window must be positive");
  if (lambda_g * window * window < 4.0)
    throw std::invalid_argument(
        "DeploymentParams: expected gateway count lambda_g*L^2 must be >= 4");
  return DeploymentParams{lambda_d, lambda_g, window, base_seed};
}

}  // namespace mtc
