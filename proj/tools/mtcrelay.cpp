// Command-line front end: configuration, experiment orchestration, output.
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "mtc/analytic.hpp"
#include "mtc/config.hpp"
#include "mtc/montecarlo.hpp"
#include "mtc/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> sets;
  std::string policy;
  std::string trials;
  std::string seed;
  std::string threads;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON configuration file");
  cmd->add_option("--set", args.sets,
                  "Override a config key, e.g. --set lambda_d=3e-3");
  cmd->add_option("--policy", args.policy, "Relay policy")
      ->check(CLI::IsMember({"npra", "lbra"}));
  cmd->add_option("--trials", args.trials, "Monte Carlo trials");
  cmd->add_option("--seed", args.seed, "Base RNG seed");
  cmd->add_option("--threads", args.threads, "Worker threads (0 = all cores)");
}

mtc::RunConfig load_config(const CommonArgs& args) {
  std::vector<std::pair<std::string, std::string>> overrides;
  for (const auto& kv : args.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: --set expects key=value, got '" +
                                  kv + "'");
    overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!args.policy.empty()) overrides.emplace_back("policy", args.policy);
  if (!args.trials.empty()) overrides.emplace_back("trials", args.trials);
  if (!args.seed.empty()) overrides.emplace_back("seed", args.seed);
  if (!args.threads.empty()) overrides.emplace_back("threads", args.threads);
  if (args.config_path.empty())
    return mtc::config_from_overrides(overrides);
  return mtc::parse_config(args.config_path, overrides);
}

mtc::NetworkSnapshot sample_snapshot(const mtc::ExperimentSpec& spec) {
  mtc::NetworkSnapshot snapshot;
  snapshot.window = spec.deployment.window;
  std::uint32_t attempt = 0;
  for (;;) {
    mtc::RngStream gw(spec.deployment.base_seed, 0,
                      mtc::StreamPurpose::kGateways, attempt);
    snapshot.gateways =
        mtc::sample_ppp(spec.deployment.lambda_g, spec.deployment.window, gw);
    if (snapshot.gateways.size() >= 2) break;
    ++attempt;
  }
  mtc::RngStream dev(spec.deployment.base_seed, 0,
                     mtc::StreamPurpose::kDevices, attempt);
  snapshot.devices =
      mtc::sample_ppp(spec.deployment.lambda_d, spec.deployment.window, dev);
  return snapshot;
}

mtc::AnalyticPoint analytic_point(const mtc::RunConfig& config) {
  const mtc::ExperimentSpec spec = config.to_experiment();
  mtc::AnalyticPoint point;
  point.radio = spec.radio;
  point.plan = spec.plan;
  point.lambda_d = config.lambda_d;
  point.lambda_g = config.lambda_g;
  point.window = config.window;
  point.samples = config.samples;
  point.seed = config.seed;
  return point;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (tok.empty())
      throw std::invalid_argument("config: --values: empty element");
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size())
      throw std::invalid_argument("config: --values: cannot parse '" + tok +
                                  "'");
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

void deliver(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    mtc::write_text_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MTC relay network simulator and analytic calculator"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string out_path, plot_path, axis, values_text, metric_name = "capacity";
  bool log_y = false;

  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo run of one parameter point");
  add_common(simulate, args);
  simulate->add_option("--out", out_path, "CSV output path");

  auto* analytic = app.add_subcommand(
      "analytic", "Closed-form pipeline evaluation of one parameter point");
  add_common(analytic, args);
  analytic->add_option("--out", out_path, "CSV output path");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Sweep lambda_d or lambda_g, both policies");
  add_common(sweep_cmd, args);
  sweep_cmd->add_option("--axis", axis, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"lambda_d", "lambda_g"}));
  sweep_cmd->add_option("--values", values_text, "Comma-separated sweep values")
      ->required();
  sweep_cmd->add_option("--out", out_path, "CSV output path");
  sweep_cmd->add_option("--plot", plot_path, "SVG chart output path");
  sweep_cmd->add_option("--metric", metric_name, "Plotted metric")
      ->check(CLI::IsMember({"epsilon", "capacity"}));
  sweep_cmd->add_flag("--log-y", log_y, "Logarithmic y axis for the plot");

  auto* compare =
      app.add_subcommand("compare", "LBRA vs NPRA at one parameter point");
  add_common(compare, args);
  compare->add_option("--out", out_path, "Report output path");

  auto* dump = app.add_subcommand("dump", "Write one sampled snapshot as CSV");
  add_common(dump, args);
  dump->add_option("--out", out_path, "CSV output path");

  auto* explain = app.add_subcommand(
      "explain", "Write the LBRA transfer plan of one snapshot as CSV");
  add_common(explain, args);
  explain->add_option("--out", out_path, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    const mtc::RunConfig config = load_config(args);

    if (simulate->parsed()) {
      mtc::ExperimentSpec spec = config.to_experiment();
      mtc::SweepRow row = mtc::run_experiment(spec);
      deliver(mtc::csv_from_rows({row}, config), out_path);
      if (!out_path.empty())
        std::cout << "epsilon=" << mtc::format_value(row.epsilon_hat)
                  << " capacity=" << mtc::format_value(row.capacity_hat)
                  << "\n";
    } else if (analytic->parsed()) {
      const mtc::AnalyticPoint point = analytic_point(config);
      const mtc::AnalyticResult res =
          mtc::outage(point, mtc::policy_from_name(config.policy));
      mtc::SweepRow row;
      row.policy = config.policy;
      row.axis = "lambda_d";
      row.value = config.lambda_d;
      row.epsilon_hat = res.epsilon;
      row.epsilon_ci = std::numeric_limits<double>::quiet_NaN();
      row.capacity_hat = res.capacity;
      row.no_outage_capacity = config.lambda_d;
      row.n_trials = config.samples;
      row.seed = config.seed;
      deliver(mtc::csv_from_rows({row}, config), out_path);
    } else if (sweep_cmd->parsed()) {
      const std::vector<double> values = parse_values(values_text);
      mtc::ExperimentSpec spec = config.to_experiment();
      const std::vector<mtc::SweepRow> rows = mtc::sweep(axis, values, spec);
      if (!out_path.empty()) mtc::emit_csv(rows, config, out_path);
      if (!plot_path.empty())
        mtc::emit_plot(rows, config, plot_path,
                       metric_name == "epsilon" ? mtc::PlotMetric::kEpsilon
                                                : mtc::PlotMetric::kCapacity,
                       log_y);
      if (out_path.empty() && plot_path.empty())
        std::cout << mtc::csv_from_rows(rows, config);
    } else if (compare->parsed()) {
      const mtc::CompareReport rep = mtc::compare_point(config);
      deliver(mtc::format_compare(rep, config), out_path);
    } else if (dump->parsed()) {
      const mtc::ExperimentSpec spec = config.to_experiment();
      deliver(mtc::snapshot_csv(sample_snapshot(spec), config), out_path);
    } else if (explain->parsed()) {
      const mtc::ExperimentSpec spec = config.to_experiment();
      const mtc::NetworkSnapshot snapshot = sample_snapshot(spec);
      const mtc::Grouping nearest =
          mtc::assign_nearest(snapshot, spec.resolution);
      const auto [grouping, plan] =
          mtc::regroup(nearest, snapshot, mtc::Policy::kLbra);
      (void)grouping;
      deliver(mtc::transfer_plan_csv(plan, config), out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  }
  return kExitOk;
}
