#pragma once

#include <string>
#include <vector>

#include "mtc/analytic.hpp"
#include "mtc/config.hpp"
#include "mtc/montecarlo.hpp"

namespace mtc {

/// Shortest-round-trip-ish deterministic formatting used by every report:
/// nine significant digits, "nan" for the missing-CI sentinel.
std::string format_value(double v);

/// Sweep rows as CSV: resolved-config metadata comments, the pinned header
/// `policy,axis,value,epsilon,epsilon_ci,capacity,no_outage_capacity,trials,seed`,
/// one row per (value, policy) in sweep order. Byte-identical across reruns
/// of the same config.
std::string csv_from_rows(const std::vector<SweepRow>& rows,
                          const RunConfig& config);
void emit_csv(const std::vector<SweepRow>& rows, const RunConfig& config,
              const std::string& path);

enum class PlotMetric { kEpsilon, kCapacity };

/// Static SVG chart of one sweep: swept parameter on x, the chosen metric on
/// y, one polyline per policy with CI whiskers, plus the no-outage reference
/// line for capacity. log_y applies a log10 axis (outage plots).
std::string svg_from_rows(const std::vector<SweepRow>& rows, PlotMetric metric,
                          bool log_y, const RunConfig& config);
void emit_plot(const std::vector<SweepRow>& rows, const RunConfig& config,
               const std::string& path, PlotMetric metric, bool log_y);

struct CompareReport {
  SweepRow sim_npra;
  SweepRow sim_lbra;
  AnalyticResult ana_npra;
  AnalyticResult ana_lbra;
  double capacity_gain_db = 0.0;       // 10 log10(C_lbra / C_npra), simulated
  double success_gain_db = 0.0;        // 10 log10((1-e_l)/(1-e_n)), simulated
  double outage_improvement_db = 0.0;  // 10 log10(e_npra / e_lbra), simulated
  std::string verdict;                 // improvement | tie | regression
};

/// Runs both policies (simulation and analytic) at the config point and
/// derives the dB comparison metrics with a CI-aware verdict.
CompareReport compare_point(const RunConfig& config);
std::string format_compare(const CompareReport& report,
                           const RunConfig& config);

/// Snapshot dump: metadata comments then `kind,x,y` rows, devices first.
std::string snapshot_csv(const NetworkSnapshot& snapshot,
                         const RunConfig& config);

/// Transfer plan: metadata comments then `donor,receiver,k_change` rows.
std::string transfer_plan_csv(const TransferPlan& plan,
                              const RunConfig& config);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mtc
