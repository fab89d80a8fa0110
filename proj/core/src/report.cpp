#include "mtc/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mtc {
namespace {

std::string metadata_block(const RunConfig& config, const char* kind) {
  std::ostringstream os;
  os << "# mtcrelay " << kind << "\n";
  for (const auto& [key, value] : config.items())
    os << "# " << key << " = " << value << "\n";
  return os.str();
}

double metric_of(const SweepRow& row, PlotMetric metric) {
  return metric == PlotMetric::kEpsilon ? row.epsilon_hat : row.capacity_hat;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_from_rows(const std::vector<SweepRow>& rows,
                          const RunConfig& config) {
  if (rows.empty()) throw std::invalid_argument("csv_from_rows: no rows");
  std::ostringstream os;
  os << metadata_block(config, "results");
  os << "policy,axis,value,epsilon,epsilon_ci,capacity,no_outage_capacity,"
        "trials,seed\n";
  for (const auto& row : rows) {
    os << row.policy << ',' << row.axis << ',' << format_value(row.value) << ','
       << format_value(row.epsilon_hat) << ',' << format_value(row.epsilon_ci)
       << ',' << format_value(row.capacity_hat) << ','
       << format_value(row.no_outage_capacity) << ',' << row.n_trials << ','
       << row.seed << "\n";
  }
  return os.str();
}

void emit_csv(const std::vector<SweepRow>& rows, const RunConfig& config,
              const std::string& path) {
  write_text_file(path, csv_from_rows(rows, config));
}

std::string svg_from_rows(const std::vector<SweepRow>& rows, PlotMetric metric,
                          bool log_y, const RunConfig& config) {
  if (rows.empty()) throw std::invalid_argument("svg_from_rows: no rows");
  const std::string axis = rows.front().axis;
  for (const auto& r : rows)
    if (r.axis != axis)
      throw std::invalid_argument("svg_from_rows: rows mix sweep axes");

  const double width = 800, height = 560;
  const double ml = 90, mr = 30, mt = 40, mb = 70;

  double xmin = rows.front().value, xmax = rows.front().value;
  double ymin = 0.0, ymax = 0.0;
  bool first = true;
  for (const auto& r : rows) {
    xmin = std::min(xmin, r.value);
    xmax = std::max(xmax, r.value);
    double candidates[3] = {metric_of(r, metric),
                            metric_of(r, metric) +
                                (std::isnan(r.epsilon_ci) ? 0.0 : r.epsilon_ci),
                            metric == PlotMetric::kCapacity
                                ? r.no_outage_capacity
                                : metric_of(r, metric)};
    for (double v : candidates) {
      if (log_y && !(v > 0.0)) continue;
      if (first) {
        ymin = ymax = v;
        first = false;
      }
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (first) throw std::invalid_argument("svg_from_rows: no plottable values");
  if (log_y) {
    ymin = std::log10(ymin);
    ymax = std::log10(ymax);
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto x_of = [&](double v) {
    return ml + (v - xmin) / (xmax - xmin) * (width - ml - mr);
  };
  auto y_of = [&](double v) {
    const double t = log_y ? std::log10(std::max(v, 1e-300)) : v;
    return height - mb - (t - ymin) / (ymax - ymin) * (height - mt - mb);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "<!--\n" << metadata_block(config, "plot") << "-->\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and ticks.
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
     << width - mr << "\" y2=\"" << height - mb << "\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
     << "\" y2=\"" << height - mb << "\"/>\n";
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  const int n_ticks = 5;
  for (int i = 0; i <= n_ticks; ++i) {
    const double fx = xmin + (xmax - xmin) * i / n_ticks;
    os << "<line stroke=\"black\" x1=\"" << x_of(fx) << "\" y1=\""
       << height - mb << "\" x2=\"" << x_of(fx) << "\" y2=\"" << height - mb + 5
       << "\"/>\n";
    os << "<text text-anchor=\"middle\" x=\"" << x_of(fx) << "\" y=\""
       << height - mb + 20 << "\">" << tick_label(fx) << "</text>\n";
    const double fy = ymin + (ymax - ymin) * i / n_ticks;
    const double vy = log_y ? std::pow(10.0, fy) : fy;
    const double py = height - mb - (fy - ymin) / (ymax - ymin) * (height - mt - mb);
    os << "<line stroke=\"black\" x1=\"" << ml - 5 << "\" y1=\"" << py
       << "\" x2=\"" << ml << "\" y2=\"" << py << "\"/>\n";
    os << "<text text-anchor=\"end\" x=\"" << ml - 8 << "\" y=\"" << py + 4
       << "\">" << tick_label(vy) << "</text>\n";
  }
  os << "<text text-anchor=\"middle\" x=\"" << (ml + width - mr) / 2
     << "\" y=\"" << height - 20 << "\">" << axis << "</text>\n";
  os << "<text text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << (mt + height - mb) / 2 << ")\" x=\"20\" y=\""
     << (mt + height - mb) / 2 << "\">"
     << (metric == PlotMetric::kEpsilon ? "outage probability"
                                        : "transmission capacity")
     << (log_y ? " (log)" : "") << "</text>\n";
  os << "</g>\n";

  struct Series {
    const char* name;
    const char* color;
  };
  const Series series[2] = {{"npra", "#1f77b4"}, {"lbra", "#d62728"}};
  for (const auto& s : series) {
    std::ostringstream pts;
    bool any = false;
    for (const auto& r : rows) {
      if (r.policy != s.name) continue;
      any = true;
      pts << x_of(r.value) << ',' << y_of(metric_of(r, metric)) << ' ';
      if (!std::isnan(r.epsilon_ci) && r.epsilon_ci > 0.0) {
        const double scale =
            metric == PlotMetric::kCapacity ? r.no_outage_capacity : 1.0;
        const double lo = metric_of(r, metric) - r.epsilon_ci * scale;
        const double hi = metric_of(r, metric) + r.epsilon_ci * scale;
        os << "<line stroke=\"" << s.color << "\" x1=\"" << x_of(r.value)
           << "\" y1=\"" << y_of(lo) << "\" x2=\"" << x_of(r.value)
           << "\" y2=\"" << y_of(hi) << "\"/>\n";
      }
    }
    if (any)
      os << "<polyline fill=\"none\" stroke=\"" << s.color
         << "\" stroke-width=\"2\" points=\"" << pts.str() << "\"/>\n";
  }

  if (metric == PlotMetric::kCapacity) {
    std::ostringstream pts;
    for (const auto& r : rows)
      if (r.policy == "npra")
        pts << x_of(r.value) << ',' << y_of(r.no_outage_capacity) << ' ';
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-dasharray=\"6 4\" "
          "points=\""
       << pts.str() << "\"/>\n";
  }

  os << "<g font-family=\"sans-serif\" font-size=\"13\">\n";
  os << "<text x=\"" << width - 180 << "\" y=\"" << mt + 10
     << "\" fill=\"#1f77b4\">NPRA</text>\n";
  os << "<text x=\"" << width - 180 << "\" y=\"" << mt + 28
     << "\" fill=\"#d62728\">LBRA</text>\n";
  if (metric == PlotMetric::kCapacity)
    os << "<text x=\"" << width - 180 << "\" y=\"" << mt + 46
       << "\" fill=\"black\">no outage</text>\n";
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

void emit_plot(const std::vector<SweepRow>& rows, const RunConfig& config,
               const std::string& path, PlotMetric metric, bool log_y) {
  write_text_file(path, svg_from_rows(rows, metric, log_y, config));
}

CompareReport compare_point(const RunConfig& config) {
  CompareReport rep;

  ExperimentSpec spec = config.to_experiment();
  spec.policy = Policy::kNpra;
  rep.sim_npra = run_experiment(spec);
  spec.policy = Policy::kLbra;
  rep.sim_lbra = run_experiment(spec);

  AnalyticPoint point;
  point.radio = spec.radio;
  point.plan = spec.plan;
  point.lambda_d = config.lambda_d;
  point.lambda_g = config.lambda_g;
  point.window = config.window;
  point.samples = config.samples;
  point.seed = config.seed;
  rep.ana_npra = outage(point, Policy::kNpra);
  rep.ana_lbra = outage(point, Policy::kLbra);

  rep.capacity_gain_db =
      10.0 * std::log10(rep.sim_lbra.capacity_hat / rep.sim_npra.capacity_hat);
  rep.success_gain_db = 10.0 * std::log10((1.0 - rep.sim_lbra.epsilon_hat) /
                                          (1.0 - rep.sim_npra.epsilon_hat));
  rep.outage_improvement_db =
      10.0 * std::log10(rep.sim_npra.epsilon_hat / rep.sim_lbra.epsilon_hat);

  // CI-aware verdict on the simulated outage difference.
  const double se_n = rep.sim_npra.epsilon_ci / 1.959963985;
  const double se_l = rep.sim_lbra.epsilon_ci / 1.959963985;
  const double se = std::sqrt(se_n * se_n + se_l * se_l);
  const double diff = rep.sim_npra.epsilon_hat - rep.sim_lbra.epsilon_hat;
  if (std::isnan(se) || se == 0.0)
    rep.verdict = "tie";
  else if (diff > 1.959963985 * se)
    rep.verdict = "improvement";
  else if (diff < -1.959963985 * se)
    rep.verdict = "regression";
  else
    rep.verdict = "tie";
  return rep;
}

std::string format_compare(const CompareReport& rep, const RunConfig& config) {
  std::ostringstream os;
  os << metadata_block(config, "compare");
  os << "# dB convention: 10*log10 of the ratio of linear quantities;\n";
  os << "# outage improvement uses eps_npra/eps_lbra.\n";
  auto line = [&](const char* name, const SweepRow& row) {
    os << name << ": epsilon=" << format_value(row.epsilon_hat)
       << " ci=" << format_value(row.epsilon_ci)
       << " capacity=" << format_value(row.capacity_hat)
       << " trials=" << row.n_trials << "\n";
  };
  line("sim npra", rep.sim_npra);
  line("sim lbra", rep.sim_lbra);
  os << "ana npra: epsilon=" << format_value(rep.ana_npra.epsilon)
     << " capacity=" << format_value(rep.ana_npra.capacity) << "\n";
  os << "ana lbra: epsilon=" << format_value(rep.ana_lbra.epsilon)
     << " capacity=" << format_value(rep.ana_lbra.capacity) << "\n";
  os << "capacity gain: " << format_value(rep.capacity_gain_db) << " dB"
     << " (linear ratio "
     << format_value(rep.sim_lbra.capacity_hat / rep.sim_npra.capacity_hat)
     << ")\n";
  os << "success-rate gain: " << format_value(rep.success_gain_db) << " dB\n";
  os << "outage improvement: " << format_value(rep.outage_improvement_db)
     << " dB (linear ratio "
     << format_value(rep.sim_npra.epsilon_hat / rep.sim_lbra.epsilon_hat)
     << ")\n";
  os << "verdict: " << rep.verdict << "\n";
  return os.str();
}

std::string snapshot_csv(const NetworkSnapshot& snapshot,
                         const RunConfig& config) {
  std::ostringstream os;
  os << metadata_block(config, "snapshot");
  os << "kind,x,y\n";
  for (const auto& p : snapshot.devices)
    os << "device," << format_value(p.x) << ',' << format_value(p.y) << "\n";
  for (const auto& p : snapshot.gateways)
    os << "gateway," << format_value(p.x) << ',' << format_value(p.y) << "\n";
  return os.str();
}

std::string transfer_plan_csv(const TransferPlan& plan,
                              const RunConfig& config) {
  std::ostringstream os;
  os << metadata_block(config, "transfers");
  os << "donor,receiver,k_change\n";
  for (const auto& move : plan.moves)
    os << move.donor << ',' << move.receiver << ',' << move.k_change << "\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace mtc
