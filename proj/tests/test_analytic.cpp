#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mtc/analytic.hpp"
#include "mtc/quadrature.hpp"
#include "test_util.hpp"

using namespace mtc;
using mtc::test::close_abs;
using mtc::test::close_rel;

namespace {

constexpr double kPi = 3.141592653589793;

// Independent oracle: direct Poisson pmf summation in log space.
double tail_oracle(double mean, std::uint64_t k0) {
  if (k0 == 0) return 1.0;
  const std::uint64_t kmax =
      k0 + 400 + static_cast<std::uint64_t>(mean + 40.0 * std::sqrt(mean));
  double sum = 0.0;
  for (std::uint64_t k = kmax; k >= k0; --k) {  // small terms first
    sum += std::exp(double(k) * std::log(mean) - mean -
                    std::lgamma(double(k) + 1.0));
    if (k == k0) break;
  }
  return sum;
}

RadioParams paper_radio() { return RadioParams::from_db(3.0, 5.0); }

}  // namespace

TEST_CASE("poisson transfer probabilities against the pmf oracle") {
  CHECK(prob_transfer_in(1.0, 5.0, 0) == 1.0);
  CHECK(prob_transfer_out(1.0, 5.0, 0) == 0.0);
  CHECK(close_rel(prob_transfer_in(1e-3, 5000.0, 5), 0.559506714935, 1e-9));
  CHECK(close_rel(prob_transfer_out(1e-3, 5000.0, 5), 0.440493285065, 1e-9));
  CHECK(prob_transfer_in(1e-3, 5000.0, 50) < 1e-20);
  CHECK(prob_transfer_in(1e-3, 5000.0, 50) > 0.0);

  RngStream s(53, 0, StreamPurpose::kGroupCounts);
  for (int i = 0; i < 60; ++i) {
    const double mean = 0.05 + 40.0 * s.uniform();
    const auto k0 = s.uniform_int(80);
    const double in = prob_transfer_in(1.0, mean, k0);
    CHECK(close_abs(in, tail_oracle(mean, k0), 1e-10));
  }
}

TEST_CASE("transfer probabilities partition to one") {
  RngStream s(59, 0, StreamPurpose::kGroupCounts);
  for (int i = 0; i < 100; ++i) {
    const double mean = 0.01 + 60.0 * s.uniform();
    const auto k0 = s.uniform_int(120);
    const double in = prob_transfer_in(2e-3, mean / 2e-3, k0);
    const double out = prob_transfer_out(2e-3, mean / 2e-3, k0);
    CHECK(close_abs(in + out, 1.0, 1e-12));
    CHECK(in >= 0.0);
    CHECK(out >= 0.0);
  }
}

TEST_CASE("capture_conditional") {
  const RadioParams radio = paper_radio();
  CHECK(capture_conditional(0.0, 2e-3, 60, radio) == 1.0);
  CHECK(close_rel(capture_conditional(50.0, 2e-3, 60, radio), 0.633808964045,
                  1e-9));
  // monotone decreasing in r and lambda_d
  double prev = 1.5;
  for (const double r : {10.0, 30.0, 70.0, 150.0}) {
    const double v = capture_conditional(r, 2e-3, 60, radio);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(capture_conditional(50.0, 3e-3, 60, radio) <
        capture_conditional(50.0, 2e-3, 60, radio));
  CHECK_THROWS_AS(capture_conditional(-1.0, 2e-3, 60, radio),
                  std::invalid_argument);
}

TEST_CASE("p_c_in_v value, limits, and the averaging identity") {
  const RadioParams radio = paper_radio();
  CHECK(close_rel(p_c_in_v(2e-3, 60, 1e-4, radio), 0.632668326964, 1e-9));
  CHECK(close_rel(p_c_in_v(1e-12, 60, 1e-4, radio), 1.0, 1e-6));
  CHECK(p_c_in_v(2e-3, 120, 1e-4, radio) > p_c_in_v(2e-3, 60, 1e-4, radio));

  // Eq. averaging identity: the closed form equals the integral of the
  // conditional capture against the nearest-gateway distance density.
  RngStream s(61, 0, StreamPurpose::kPairDistance);
  for (int i = 0; i < 5; ++i) {
    const double lam_d = 5e-4 + 4e-3 * s.uniform();
    const double lam_g = 3e-5 + 4e-4 * s.uniform();
    const std::uint32_t u1 = 30 + static_cast<std::uint32_t>(s.uniform_int(90));
    const double integral = integrate_from(0.0, [&](double r) {
      return capture_conditional(r, lam_d, u1, radio) * 2.0 * kPi * lam_g * r *
             std::exp(-kPi * lam_g * r * r);
    });
    CHECK(close_rel(integral, p_c_in_v(lam_d, u1, lam_g, radio), 1e-9));
  }
}

TEST_CASE("p_c_in_t closed form equals the tail quadrature") {
  for (const double alpha : {4.0, 5.0}) {
    const RadioParams radio = RadioParams::from_db(3.0, alpha);
    for (const double lam_d : {1e-3, 2e-3, 3e-3}) {
      for (const double d : {0.0, 25.0, 50.0, 100.0}) {
        const double closed = p_c_in_t(lam_d, 60, 1e-4, radio, d);
        const double w =
            (lam_d / 60.0) * std::pow(radio.eta, 2.0 / alpha) * radio.k_alpha +
            1e-4;
        const double quad = 2.0 * kPi * 1e-4 *
                            integrate_from(d / 2.0, [&](double r) {
                              return std::exp(-kPi * w * r * r) * r;
                            });
        CAPTURE(alpha);
        CAPTURE(lam_d);
        CAPTURE(d);
        CHECK(close_rel(closed, quad, 1e-9));
      }
    }
  }
  const RadioParams radio = paper_radio();
  CHECK(p_c_in_t(2e-3, 60, 1e-4, radio, 0.0) ==
        p_c_in_v(2e-3, 60, 1e-4, radio));
  CHECK(close_rel(p_c_in_t(2e-3, 60, 1e-4, radio, 50.0), 0.463865598476,
                  1e-9));
  CHECK(p_c_in_t(2e-3, 60, 1e-4, radio, 60.0) <
        p_c_in_t(2e-3, 60, 1e-4, radio, 40.0));
}

TEST_CASE("p_c_out") {
  const RadioParams radio = paper_radio();
  const double pcv = p_c_in_v(2e-3, 60, 1e-4, radio);
  CHECK(p_c_out(2e-3, 60, 1e-4, radio, 7, 0) == pcv);
  CHECK(close_rel(p_c_out(2e-3, 60, 1e-4, radio, 4, 1), 0.75 * pcv, 1e-12));
  CHECK(p_c_out(2e-3, 60, 1e-4, radio, 4, 4) == 0.0);
  CHECK_THROWS_AS(p_c_out(2e-3, 60, 1e-4, radio, 0, 0), std::invalid_argument);
}

TEST_CASE("relay_success") {
  CHECK(relay_success(3, 10.0, 0.5) == doctest::Approx(0.6));
  CHECK(relay_success(3, 4.0, 0.5) == 1.0);
  CHECK(relay_success(0, 10.0, 0.5) == 0.0);
  CHECK(relay_success(0, 0.0, 0.5) == 1.0);  // nothing competes
  CHECK(relay_success(5, 10.0, 0.0) == 1.0);
}

namespace {

AnalyticPoint paper_point(double lambda_d, std::uint64_t samples = 20000) {
  AnalyticPoint p;
  p.radio = paper_radio();
  p.plan = SpectrumPlan::make(1800, 1800, 30, 5);
  p.lambda_d = lambda_d;
  p.lambda_g = 1e-4;
  p.window = 500.0;
  p.samples = samples;
  p.seed = 7;
  return p;
}

}  // namespace

TEST_CASE("end_to_end_success limits") {
  // Relay never binds when r2 is effectively unbounded: NPRA success is the
  // plain average capture probability.
  AnalyticPoint p = paper_point(2e-3);
  p.plan = SpectrumPlan::make(1800, 4000000000u, 30, 5);
  const AnalyticResult unbounded = end_to_end_success(p, Policy::kNpra);
  CHECK(close_rel(unbounded.p1, p_c_in_v(2e-3, 60, 1e-4, p.radio), 1e-9));
  CHECK(unbounded.p2 == 0.0);
  CHECK(unbounded.p3 == 0.0);

  // Vanishing device density: a lone device always succeeds.
  AnalyticPoint lone = paper_point(1e-12);
  const AnalyticResult r = end_to_end_success(lone, Policy::kLbra);
  CHECK(close_abs(r.epsilon, 0.0, 1e-6));
}

TEST_CASE("outage determinism and the capacity identity") {
  const AnalyticPoint p = paper_point(3e-3);
  const AnalyticResult a = outage(p, Policy::kLbra);
  const AnalyticResult b = outage(p, Policy::kLbra);
  CHECK(a.epsilon == b.epsilon);
  CHECK(a.capacity == p.lambda_d * (1.0 - a.epsilon));
  CHECK(a.epsilon >= 0.0);
  CHECK(a.epsilon <= 1.0);
  CHECK(a.mean_pr_a1 >= 0.0);
  CHECK(a.mean_pr_a1 <= 1.0);

  const AnalyticResult n = outage(p, Policy::kNpra);
  CHECK(n.p2 == 0.0);
  CHECK(n.p3 == 0.0);
}

TEST_CASE("outage trends over a density grid") {
  // epsilon grows with lambda_d; capacity gains flatten out.
  double prev_eps = -1.0;
  std::vector<double> caps;
  for (const double lam_d : {1e-3, 2e-3, 3e-3, 4e-3, 5e-3, 6e-3}) {
    const AnalyticResult r = outage(paper_point(lam_d, 40000), Policy::kNpra);
    CHECK(r.epsilon > prev_eps);
    prev_eps = r.epsilon;
    caps.push_back(r.capacity);
  }
  CHECK(caps[5] - caps[4] < caps[1] - caps[0]);  // saturation
}

TEST_CASE("analytic outage rejects invalid points") {
  AnalyticPoint p = paper_point(2e-3);
  p.samples = 0;
  CHECK_THROWS_AS(outage(p, Policy::kNpra), std::invalid_argument);
  p = paper_point(2e-3);
  p.window = 0.0;
  CHECK_THROWS_AS(outage(p, Policy::kNpra), std::invalid_argument);
}
