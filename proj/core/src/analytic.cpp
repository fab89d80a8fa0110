#include "mtc/analytic.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

#include "mtc/rng.hpp"

namespace mtc {
namespace {

constexpr double kPi = 3.141592653589793;

// Shape of the standard one-parameter Gamma fit for planar PPP Voronoi cell
// areas; mean is pinned to 1/lambda_g.
constexpr double kVoronoiShape = 3.5;

double thinned_coeff(double lambda_d, std::uint32_t u1,
                     const RadioParams& radio) {
  return (lambda_d / u1) * std::pow(radio.eta, 2.0 / radio.alpha) *
         radio.k_alpha;
}

}  // namespace

double prob_transfer_in(double lambda_d, double area_i, std::uint64_t k0) {
  if (!(area_i > 0.0) || lambda_d < 0.0)
    throw std::invalid_argument("prob_transfer_in: bad density or area");
  if (k0 == 0) return 1.0;
  const double mean = lambda_d * area_i;
  if (mean == 0.0) return 0.0;
  // Pr{X >= k0} = P(k0, mean), the regularized lower incomplete gamma.
  return boost::math::gamma_p(static_cast<double>(k0), mean);
}

double prob_transfer_out(double lambda_d, double area_i, std::uint64_t k0) {
  return 1.0 - prob_transfer_in(lambda_d, area_i, k0);
}

double capture_conditional(double r, double lambda_d, std::uint32_t u1,
                           const RadioParams& radio) {
  if (r < 0.0) throw std::invalid_argument("capture_conditional: r < 0");
  return std::exp(-kPi * thinned_coeff(lambda_d, u1, radio) * r * r);
}

double p_c_in_v(double lambda_d, std::uint32_t u1, double lambda_g,
                const RadioParams& radio) {
  if (!(lambda_g > 0.0) || lambda_d < 0.0)
    throw std::invalid_argument("p_c_in_v: densities must be positive");
  return 1.0 / (thinned_coeff(lambda_d, u1, radio) / lambda_g + 1.0);
}

double p_c_in_t(double lambda_d, std::uint32_t u1, double lambda_g,
                const RadioParams& radio, double d) {
  if (d < 0.0) throw std::invalid_argument("p_c_in_t: d < 0");
  const double w = kPi * thinned_coeff(lambda_d, u1, radio) + kPi * lambda_g;
  return p_c_in_v(lambda_d, u1, lambda_g, radio) * std::exp(-w * d * d / 4.0);
}

double p_c_out(double lambda_d, std::uint32_t u1, double lambda_g,
               const RadioParams& radio, std::uint64_t k0,
               std::uint64_t k_change) {
  if (k0 == 0) throw std::invalid_argument("p_c_out: undefined for k0 = 0");
  if (k_change > k0) throw std::invalid_argument("p_c_out: k_change > k0");
  return p_c_in_v(lambda_d, u1, lambda_g, radio) *
         (static_cast<double>(k0 - k_change) / static_cast<double>(k0));
}

double relay_success(std::uint32_t u2, double k_c, double p_c) {
  const double expected = k_c * p_c;
  if (expected <= 0.0) return 1.0;
  if (expected <= u2) return 1.0;
  return u2 / expected;
}

AnalyticResult end_to_end_success(const AnalyticPoint& point, Policy policy) {
  if (point.samples < 1)
    throw std::invalid_argument("end_to_end_success: samples must be >= 1");
  if (!(point.window > 0.0))
    throw std::invalid_argument("end_to_end_success: window must be positive");

  const double lam_d = point.lambda_d;
  const double lam_g = point.lambda_g;
  const double area_norm = point.window * point.window;
  const double pcv = p_c_in_v(lam_d, point.plan.u1, lam_g, point.radio);

  double sum_success = 0.0;
  double sum_p1 = 0.0, sum_p2 = 0.0, sum_p3 = 0.0;
  double sum_a1 = 0.0, sum_kch = 0.0;
  std::uint64_t clamps = 0;

  for (std::uint64_t s = 0; s < point.samples; ++s) {
    RngStream dist_stream(point.seed, s, StreamPurpose::kPairDistance);
    RngStream area_stream(point.seed, s, StreamPurpose::kCellArea);
    RngStream count_stream(point.seed, s, StreamPurpose::kGroupCounts);

    // Nearest-gateway pair separation follows the PPP nearest-neighbour law.
    const double pair_d =
        std::sqrt(dist_stream.exponential(1.0) / (kPi * lam_g));
    const double s0 =
        area_stream.gamma(kVoronoiShape, 1.0 / (kVoronoiShape * lam_g));
    const double si =
        area_stream.gamma(kVoronoiShape, 1.0 / (kVoronoiShape * lam_g));
    const std::uint64_t k0 = count_stream.poisson(lam_d * s0);
    const std::uint64_t ki = count_stream.poisson(lam_d * si);
    const std::uint32_t u2_0 = relay_budget(s0 / area_norm, point.plan);
    const std::uint32_t u2_i = relay_budget(si / area_norm, point.plan);

    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    if (policy == Policy::kNpra) {
      p1 = relay_success(u2_0, static_cast<double>(k0), pcv) * pcv;
    } else {
      const std::uint64_t kch = (ki > k0 ? ki - k0 : k0 - ki) / 2;
      sum_kch += static_cast<double>(kch);
      if (ki >= k0) {
        // The typical cell receives: all original members stay.
        sum_a1 += 1.0;
        p1 = relay_success(u2_0, static_cast<double>(k0 + kch), pcv) * pcv;
      } else {
        // The typical cell donates: the typical device stays with
        // probability (k0-kch)/k0, otherwise it is served by the neighbour.
        const double stay =
            static_cast<double>(k0 - kch) / static_cast<double>(k0);
        const double pct =
            p_c_in_t(lam_d, point.plan.u1, lam_g, point.radio, pair_d);
        p3 = stay * relay_success(u2_0, static_cast<double>(k0 - kch), pcv) *
             pcv;
        p2 = (1.0 - stay) *
             relay_success(u2_i, static_cast<double>(ki + kch), pct) * pct;
      }
    }

    double total = p1 + p2 + p3;
    if (total < 0.0 || total > 1.0) {
      ++clamps;
      total = std::min(1.0, std::max(0.0, total));
    }
    sum_success += total;
    sum_p1 += p1;
    sum_p2 += p2;
    sum_p3 += p3;
  }

  const double n = static_cast<double>(point.samples);
  AnalyticResult r;
  r.p1 = sum_p1 / n;
  r.p2 = sum_p2 / n;
  r.p3 = sum_p3 / n;
  r.epsilon = 1.0 - sum_success / n;
  r.capacity = point.lambda_d * (1.0 - r.epsilon);
  r.mean_pr_a1 = sum_a1 / n;
  r.mean_k_change = sum_kch / n;
  r.clamp_events = clamps;
  return r;
}

AnalyticResult outage(const AnalyticPoint& point, Policy policy) {
  return end_to_end_success(point, policy);
}

}  // namespace mtc
