#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mtc/montecarlo.hpp"

namespace mtc {

/// Everything a run needs, in raw (pre-validated) form. Defaults are the
/// standard evaluation setting: eta = 3 dB, alpha = 5, omega1 = 30,
/// omega2 = 5, R1 = R2 = 1800.
struct RunConfig {
  double eta_db = 3.0;
  double alpha = 5.0;
  std::uint32_t r1 = 1800;
  std::uint32_t r2 = 1800;
  std::uint32_t omega1 = 30;
  std::uint32_t omega2 = 5;
  double lambda_d = 2e-3;
  double lambda_g = 1e-4;
  double window = 500.0;
  std::uint64_t seed = 1;
  std::string policy = "lbra";
  std::uint64_t trials = 400;
  std::uint32_t resolution = 256;
  std::uint64_t samples = 20000;
  unsigned threads = 0;

  /// Validates every field and materializes the simulator spec.
  ExperimentSpec to_experiment() const;

  /// Serialized key=value lines (one per field) for output metadata.
  std::vector<std::pair<std::string, std::string>> items() const;
};

/// Loads a config file (JSON, possibly empty -> all defaults) and applies
/// command-line overrides on top. Overrides use the flat key names from
/// RunConfig ("lambda_d", "eta_db", ...). Unknown keys in either source are
/// rejected with the offending key path.
RunConfig parse_config(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Same, but starting from built-in defaults with no file.
RunConfig config_from_overrides(
    const std::vector<std::pair<std::string, std::string>>& overrides);

}  // namespace mtc
