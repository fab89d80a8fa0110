#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mtc/params.hpp"
#include "test_util.hpp"

using namespace mtc;
using mtc::test::close_rel;

namespace {

// Closed form for the K integral, used only as a test oracle.
double k_alpha_closed(double alpha) {
  const double p = alpha / 2.0;
  return (3.141592653589793 / p) / std::sin(3.141592653589793 / p);
}

}  // namespace

TEST_CASE("db_to_linear") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(close_rel(db_to_linear(10.0), 10.0, 1e-15));
  CHECK(close_rel(db_to_linear(3.0), 1.99526231496888, 1e-12));
  CHECK(close_rel(db_to_linear(-1.0), 0.794328234724281, 1e-12));
  CHECK_THROWS_AS(db_to_linear(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(db_to_linear(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("k_alpha quadrature against the closed form") {
  CHECK(close_rel(compute_k_alpha(4.0), 1.5707963267948966, 1e-9));
  CHECK(close_rel(compute_k_alpha(5.0), 1.3213063996776496, 1e-9));
  CHECK(close_rel(compute_k_alpha(6.0), 1.2091995761561452, 1e-9));
  // property sweep over the admissible exponent range
  for (double alpha = 2.1; alpha <= 10.0; alpha += 0.1) {
    CAPTURE(alpha);
    CHECK(close_rel(compute_k_alpha(alpha), k_alpha_closed(alpha), 1e-9));
  }
  CHECK_THROWS_AS(compute_k_alpha(2.0), std::invalid_argument);
  CHECK_THROWS_AS(compute_k_alpha(1.5), std::invalid_argument);
}

TEST_CASE("RadioParams caches consistent values") {
  const RadioParams r = RadioParams::from_db(3.0, 5.0);
  CHECK(close_rel(r.eta, std::pow(10.0, 0.3), 1e-12));
  CHECK(close_rel(r.k_alpha, k_alpha_closed(5.0), 1e-9));
  CHECK(r.alpha == 5.0);
  CHECK_THROWS_AS(RadioParams::from_db(3.0, 2.0), std::invalid_argument);
}

TEST_CASE("channel_count") {
  CHECK(channel_count(SpectrumPlan::make(1800, 1800, 30, 5)) == 60);
  CHECK(channel_count(SpectrumPlan::make(30, 1800, 30, 5)) == 1);
  CHECK_THROWS_AS(SpectrumPlan::make(29, 1800, 30, 5), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumPlan::make(0, 1800, 30, 5), std::invalid_argument);
}

TEST_CASE("relay_budget") {
  const SpectrumPlan plan = SpectrumPlan::make(1800, 1800, 30, 5);
  CHECK(relay_budget(0.1, plan) == 36);
  CHECK(relay_budget(0.0, plan) == 0);
  CHECK(relay_budget(0.01, plan) == 3);  // floor(3.6)
  CHECK(relay_budget(1.0, plan) == 360);
  CHECK_THROWS_AS(relay_budget(-0.1, plan), std::invalid_argument);
  CHECK_THROWS_AS(relay_budget(1.1, plan), std::invalid_argument);
}

TEST_CASE("relay_budget is monotone in gamma and r2") {
  const SpectrumPlan plan = SpectrumPlan::make(1800, 1800, 30, 5);
  RngStream s(31, 0, StreamPurpose::kCellArea);
  for (int i = 0; i < 500; ++i) {
    const double a = s.uniform();
    const double b = s.uniform();
    const double lo = std::min(a, b), hi = std::max(a, b);
    CHECK(relay_budget(lo, plan) <= relay_budget(hi, plan));
    const SpectrumPlan bigger = SpectrumPlan::make(1800, plan.r2 + 600, 30, 5);
    CHECK(relay_budget(lo, plan) <= relay_budget(lo, bigger));
  }
}

TEST_CASE("total granted budget stays within one floor loss per gateway") {
  const SpectrumPlan plan = SpectrumPlan::make(1800, 1800, 30, 5);
  RngStream s(37, 0, StreamPurpose::kCellArea);
  for (int rep = 0; rep < 200; ++rep) {
    const int g = 2 + static_cast<int>(s.uniform_int(40));
    std::vector<double> gamma(g);
    double total = 0.0;
    for (auto& v : gamma) {
      v = s.exponential(1.0);
      total += v;
    }
    std::uint64_t granted = 0;
    for (auto& v : gamma) {
      v /= total;  // now sums to 1
      granted += relay_budget(v, plan);
    }
    CHECK(granted <= plan.r2 / plan.omega2 + static_cast<std::uint64_t>(g));
  }
}

TEST_CASE("DeploymentParams validation") {
  CHECK_NOTHROW(DeploymentParams::make(2e-3, 1e-4, 500.0, 1));
  CHECK_THROWS_AS(DeploymentParams::make(0.0, 1e-4, 500.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(DeploymentParams::make(2e-3, 1e-4, 150.0, 1),
                  std::invalid_argument);  // expected gateways < 4
}
