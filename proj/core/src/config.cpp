#include "mtc/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mtc {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + where + ": " + what);
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

std::uint64_t as_uint(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    fail(where, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

void apply_section(RunConfig& cfg, const std::string& section, const json& obj) {
  for (const auto& [key, value] : obj.items()) {
    const std::string where = section + "." + key;
    if (section == "radio") {
      if (key == "eta_db") cfg.eta_db = as_number(value, where);
      else if (key == "alpha") cfg.alpha = as_number(value, where);
      else fail(where, "unknown key");
    } else if (section == "spectrum") {
      if (key == "r1") cfg.r1 = static_cast<std::uint32_t>(as_uint(value, where));
      else if (key == "r2") cfg.r2 = static_cast<std::uint32_t>(as_uint(value, where));
      else if (key == "omega1") cfg.omega1 = static_cast<std::uint32_t>(as_uint(value, where));
      else if (key == "omega2") cfg.omega2 = static_cast<std::uint32_t>(as_uint(value, where));
      else fail(where, "unknown key");
    } else if (section == "deployment") {
      if (key == "lambda_d") cfg.lambda_d = as_number(value, where);
      else if (key == "lambda_g") cfg.lambda_g = as_number(value, where);
      else if (key == "window") cfg.window = as_number(value, where);
      else if (key == "seed") cfg.seed = as_uint(value, where);
      else fail(where, "unknown key");
    } else if (section == "experiment") {
      if (key == "policy") cfg.policy = as_string(value, where);
      else if (key == "trials") cfg.trials = as_uint(value, where);
      else if (key == "resolution") cfg.resolution = static_cast<std::uint32_t>(as_uint(value, where));
      else if (key == "samples") cfg.samples = as_uint(value, where);
      else if (key == "threads") cfg.threads = static_cast<unsigned>(as_uint(value, where));
      else fail(where, "unknown key");
    } else {
      fail(section, "unknown section");
    }
  }
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(key, "cannot parse '" + text + "' as a number");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(key, "cannot parse '" + text + "' as a non-negative integer");
  }
}

void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value) {
  if (key == "eta_db") cfg.eta_db = parse_double(key, value);
  else if (key == "alpha") cfg.alpha = parse_double(key, value);
  else if (key == "r1") cfg.r1 = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "r2") cfg.r2 = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "omega1") cfg.omega1 = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "omega2") cfg.omega2 = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "lambda_d") cfg.lambda_d = parse_double(key, value);
  else if (key == "lambda_g") cfg.lambda_g = parse_double(key, value);
  else if (key == "window") cfg.window = parse_double(key, value);
  else if (key == "seed") cfg.seed = parse_uint(key, value);
  else if (key == "policy") cfg.policy = value;
  else if (key == "trials") cfg.trials = parse_uint(key, value);
  else if (key == "resolution") cfg.resolution = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "samples") cfg.samples = parse_uint(key, value);
  else if (key == "threads") cfg.threads = static_cast<unsigned>(parse_uint(key, value));
  else fail(key, "unknown key");
}

}  // namespace

ExperimentSpec RunConfig::to_experiment() const {
  ExperimentSpec spec;
  spec.radio = RadioParams::from_db(eta_db, alpha);
  spec.plan = SpectrumPlan::make(r1, r2, omega1, omega2);
  spec.deployment = DeploymentParams::make(lambda_d, lambda_g, window, seed);
  spec.policy = policy_from_name(policy);
  spec.trials = trials;
  spec.resolution = resolution;
  spec.workers = threads;
  spec.validate();
  if (samples < 1)
    throw std::invalid_argument("config: experiment.samples: must be >= 1");
  return spec;
}

std::vector<std::pair<std::string, std::string>> RunConfig::items() const {
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  return {
      {"eta_db", num(eta_db)},
      {"alpha", num(alpha)},
      {"r1", std::to_string(r1)},
      {"r2", std::to_string(r2)},
      {"omega1", std::to_string(omega1)},
      {"omega2", std::to_string(omega2)},
      {"lambda_d", num(lambda_d)},
      {"lambda_g", num(lambda_g)},
      {"window", num(window)},
      {"seed", std::to_string(seed)},
      {"policy", policy},
      {"trials", std::to_string(trials)},
      {"resolution", std::to_string(resolution)},
      {"samples", std::to_string(samples)},
      {"threads", std::to_string(threads)},
  };
}

RunConfig parse_config(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  RunConfig cfg;
  const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
  if (!blank) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      fail(path, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(path, "top level must be an object");
    for (const auto& [section, obj] : doc.items()) {
      if (!obj.is_object()) fail(section, "expected an object of settings");
      apply_section(cfg, section, obj);
    }
  }
  for (const auto& [key, value] : overrides) apply_override(cfg, key, value);
  return cfg;
}

RunConfig config_from_overrides(
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  RunConfig cfg;
  for (const auto& [key, value] : overrides) apply_override(cfg, key, value);
  return cfg;
}

}  // namespace mtc
