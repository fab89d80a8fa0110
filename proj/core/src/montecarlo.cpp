#include "mtc/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mtc {

void ExperimentSpec::validate() const {
  if (trials < 1)
    throw std::invalid_argument("ExperimentSpec: trials must be >= 1");
  if (resolution < 64)
    throw std::invalid_argument("ExperimentSpec: resolution must be >= 64");
}

const char* policy_name(Policy policy) {
  return policy == Policy::kNpra ? "npra" : "lbra";
}

Policy policy_from_name(const std::string& name) {
  if (name == "npra") return Policy::kNpra;
  if (name == "lbra") return Policy::kLbra;
  throw std::invalid_argument("unknown policy '" + name + "'");
}

TrialResult run_trial(const ExperimentSpec& spec, std::uint64_t trial_index) {
  spec.validate();
  const auto& dep = spec.deployment;

  NetworkSnapshot snapshot;
  snapshot.window = dep.window;

  // Gateways first; a draw with fewer than two gateways leaves the pairing
  // step undefined and is resampled on the next attempt substream.
  std::uint32_t attempt = 0;
  for (;;) {
    RngStream gw_stream(dep.base_seed, trial_index, StreamPurpose::kGateways,
                        attempt);
    snapshot.gateways = sample_ppp(dep.lambda_g, dep.window, gw_stream);
    if (snapshot.gateways.size() >= 2) break;
    if (++attempt > 1000)
      throw std::runtime_error("run_trial: gateway draw degenerate beyond retry budget");
  }

  RngStream dev_stream(dep.base_seed, trial_index, StreamPurpose::kDevices,
                       attempt);
  snapshot.devices = sample_ppp(dep.lambda_d, dep.window, dev_stream);

  TrialResult result;
  result.resample_count = attempt;
  result.n_devices = snapshot.devices.size();
  result.per_gateway.resize(snapshot.gateways.size());
  if (snapshot.devices.empty()) {
    // Valid but empty trial; excluded from the ratio estimator upstream.
    return result;
  }

  Grouping nearest = assign_nearest(snapshot, spec.resolution);
  auto [grouping, plan] = regroup(nearest, snapshot, spec.policy);

  std::vector<std::uint32_t> budgets(snapshot.gateways.size());
  for (std::size_t g = 0; g < budgets.size(); ++g)
    budgets[g] = relay_budget(grouping.gamma[g], spec.plan);

  RngStream chan_stream(dep.base_seed, trial_index, StreamPurpose::kChannels,
                        attempt);
  const ChannelAssignment channels =
      assign_channels(snapshot.devices.size(), spec.plan.u1, chan_stream);

  const LinkFades fades(dep.base_seed, trial_index, attempt);
  const std::vector<char> captured =
      resolve_captures(grouping, channels, snapshot, spec.radio, fades);

  RngStream relay_stream(dep.base_seed, trial_index, StreamPurpose::kRelay,
                         attempt);
  const std::vector<char> relayed =
      relay_select(grouping, captured, budgets, relay_stream);

  result.success.resize(snapshot.devices.size());
  for (std::size_t d = 0; d < snapshot.devices.size(); ++d) {
    result.success[d] = captured[d] && relayed[d];
    if (captured[d]) {
      ++result.n_captured;
      ++result.per_gateway[grouping.owner[d]].captured;
    }
    if (result.success[d]) {
      ++result.n_relayed;
      ++result.per_gateway[grouping.owner[d]].relayed;
    }
  }
  for (std::size_t g = 0; g < budgets.size(); ++g) {
    result.per_gateway[g].members = grouping.counts[g];
    result.per_gateway[g].budget = budgets[g];
  }
  return result;
}

SweepRow run_experiment(const ExperimentSpec& spec) {
  spec.validate();

  struct TrialSummary {
    std::uint64_t devices = 0;
    std::uint64_t captured = 0;
    std::uint64_t relayed = 0;
    std::uint64_t gateways = 0;
  };
  std::vector<TrialSummary> summaries(spec.trials);

  unsigned workers = spec.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, spec.trials));

  std::atomic<std::uint64_t> next_trial{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    for (;;) {
      const std::uint64_t t = next_trial.fetch_add(1);
      if (t >= spec.trials) return;
      try {
        const TrialResult r = run_trial(spec, t);
        summaries[t] = {r.n_devices, r.n_captured, r.n_relayed,
                        r.per_gateway.size()};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Fixed-order reduction over trial indices: integer sums plus the
  // per-trial outage moments for the interval.
  std::uint64_t total_devices = 0, total_captured = 0, total_relayed = 0;
  std::uint64_t total_gateways = 0;
  double outage_sum = 0.0, outage_sq_sum = 0.0;
  std::uint64_t contributing = 0;
  for (const auto& s : summaries) {
    total_devices += s.devices;
    total_captured += s.captured;
    total_relayed += s.relayed;
    total_gateways += s.gateways;
    if (s.devices > 0) {
      const double eps =
          1.0 - static_cast<double>(s.relayed) / static_cast<double>(s.devices);
      outage_sum += eps;
      outage_sq_sum += eps * eps;
      ++contributing;
    }
  }
  if (total_devices == 0)
    throw std::runtime_error(
        "run_experiment: every trial drew an empty device process");

  SweepRow row;
  row.policy = policy_name(spec.policy);
  row.axis = "lambda_d";
  row.value = spec.deployment.lambda_d;
  row.seed = spec.deployment.base_seed;
  row.n_trials = spec.trials;
  row.epsilon_hat = 1.0 - static_cast<double>(total_relayed) /
                              static_cast<double>(total_devices);
  row.capacity_hat = spec.deployment.lambda_d * (1.0 - row.epsilon_hat);
  row.no_outage_capacity = spec.deployment.lambda_d;
  row.mean_capture_rate = static_cast<double>(total_captured) /
                          static_cast<double>(total_devices);
  row.mean_load = total_gateways > 0
                      ? static_cast<double>(total_devices) /
                            static_cast<double>(total_gateways)
                      : 0.0;
  if (contributing >= 2) {
    const double n = static_cast<double>(contributing);
    const double mean = outage_sum / n;
    const double var =
        std::max(0.0, (outage_sq_sum - n * mean * mean) / (n - 1.0));
    row.epsilon_ci = 1.959963985 * std::sqrt(var / n);
  } else {
    row.epsilon_ci = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

std::vector<SweepRow> sweep(const std::string& axis,
                            const std::vector<double>& values,
                            const ExperimentSpec& spec_template) {
  if (axis != "lambda_d" && axis != "lambda_g")
    throw std::invalid_argument("sweep: axis must be lambda_d or lambda_g");
  if (values.empty()) throw std::invalid_argument("sweep: no values");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1]))
      throw std::invalid_argument("sweep: values must be strictly increasing");

  std::vector<SweepRow> rows;
  rows.reserve(values.size() * 2);
  for (const double v : values) {
    for (const Policy policy : {Policy::kNpra, Policy::kLbra}) {
      ExperimentSpec spec = spec_template;
      spec.policy = policy;
      if (axis == "lambda_d")
        spec.deployment.lambda_d = v;
      else
        spec.deployment.lambda_g = v;
      // Re-validate the modified deployment.
      spec.deployment = DeploymentParams::make(
          spec.deployment.lambda_d, spec.deployment.lambda_g,
          spec.deployment.window, spec.deployment.base_seed);
      SweepRow row = run_experiment(spec);
      row.axis = axis;
      row.value = v;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace mtc
