#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace majoperc {

enum class InitMode { fixed_m, bernoulli_q };

// Full description of one Monte Carlo experiment. Exactly one of m / q /
// lambda / theta selects the initial infection; lambda and theta are resolved
// to a concrete m or q through the threshold formulas before running.
struct ExperimentConfig {
  std::int64_t n = 0;
  double p = 0.0;
  InitMode mode = InitMode::fixed_m;
  std::optional<std::int64_t> m;
  std::optional<double> q;
  std::optional<double> lambda;
  std::optional<double> theta;
  std::int64_t trials = 1;
  std::uint64_t master_seed = 0;
  double confidence_level = 0.95;
  bool shared_graph = false;
  std::string output_path;            // empty = stdout
  std::vector<std::int64_t> m_grid;   // non-empty = threshold scan
  int threads = 1;                    // execution width; never affects results
};

}  // namespace majoperc
