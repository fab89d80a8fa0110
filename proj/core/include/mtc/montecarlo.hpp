#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtc/lbra.hpp"
#include "mtc/params.hpp"
#include "mtc/phy.hpp"

namespace mtc {

struct ExperimentSpec {
  DeploymentParams deployment;
  RadioParams radio;
  SpectrumPlan plan;
  Policy policy = Policy::kNpra;
  std::uint64_t trials = 1;
  std::uint32_t resolution = 256;
  unsigned workers = 0;  // 0 = hardware concurrency

  void validate() const;
};

/// One aggregated sweep point. epsilon_hat is the ratio-of-sums estimator;
/// epsilon_ci is the half-width of the 95% interval from the per-trial outage
/// spread (NaN when only one trial contributes).
struct SweepRow {
  std::string policy;
  std::string axis;
  double value = 0.0;
  double epsilon_hat = 0.0;
  double epsilon_ci = 0.0;
  double capacity_hat = 0.0;
  double no_outage_capacity = 0.0;  // lambda_d at this point
  std::uint64_t n_trials = 0;
  std::uint64_t seed = 0;
  double mean_load = 0.0;          // devices per gateway
  double mean_capture_rate = 0.0;  // captured / devices
};

/// Full pipeline for one trial: sample -> associate -> regroup -> channels ->
/// captures -> relay. All randomness is drawn from substreams keyed by
/// (base_seed, trial_index, purpose), so the result is a pure function of
/// (spec, trial_index). Degenerate gateway draws (fewer than two) are
/// resampled on the next attempt substream and counted.
TrialResult run_trial(const ExperimentSpec& spec, std::uint64_t trial_index);

/// Runs `trials` independent trials (in parallel when workers allow) and
/// aggregates. The aggregation is a fixed-order reduction over trial indices,
/// so the outcome does not depend on the worker count.
SweepRow run_experiment(const ExperimentSpec& spec);

/// One run_experiment per (value, policy), both policies, rows in sweep
/// order with NPRA first at each value. axis must be "lambda_d" or
/// "lambda_g" and values strictly increasing.
std::vector<SweepRow> sweep(const std::string& axis,
                            const std::vector<double>& values,
                            const ExperimentSpec& spec_template);

const char* policy_name(Policy policy);
Policy policy_from_name(const std::string& name);

}  // namespace mtc
