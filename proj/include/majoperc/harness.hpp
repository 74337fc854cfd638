#pragma once

#include <iosfwd>
#include <string>

#include "majoperc/experiment.hpp"
#include "majoperc/thresholds.hpp"

namespace majoperc {

// Flat `key = value` experiment description; `#` starts a comment. Unknown
// keys, duplicate keys and conflicting initialization keys are rejected with
// line-numbered diagnostics. Size values (m, m_grid entries) accept a
// trailing `n` meaning a fraction of n, e.g. `m = 0.45n`; m_grid accepts a
// comma list or `start:stop:count`.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

struct ExperimentResult {
  bool is_curve = false;
  ExperimentConfig resolved;
  Estimate estimate;    // single-point runs
  ThresholdCurve curve; // grid runs
  std::string csv;      // exact bytes emitted
};

// Dispatches to the thresholds module, renders CSV (config echo as `#`
// comment lines, then the documented header row), writes output_path when
// set. Bit-exact reproducible from the config alone.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Entry point behind the majoperc binary; also callable in-process.
// Exit codes: 0 success, 1 usage error, 2 runtime failure.
int cli(int argc, const char* const* argv);

}  // namespace majoperc
