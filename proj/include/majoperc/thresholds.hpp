#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "majoperc/experiment.hpp"

namespace majoperc {

struct ThresholdParams {
  std::int64_t n = 0;
  double p = 0.0;
  std::optional<double> lambda;
  std::optional<double> theta;
};

// d = np/(1-p), roughly the mean degree of G(n,p) for small p.
double effective_degree(std::int64_t n, double p);

// The triple logarithm in the critical-size formulas needs log log log d > 0.
inline constexpr double kMinEffectiveDegree = 15.154262241479262;  // e^e

// Critical initial-set size
//   m(lambda) = n/2 - (n/2)·sqrt(log d / d) + lambda·n·logloglog d / sqrt(d·log d),
// rounded to nearest and clamped to [0, n]. Requires d > e^e and lambda set.
std::int64_t critical_m(const ThresholdParams& params);

// Critical Bernoulli infection probability; lambda selects
//   q = 1/2 - (1/2)·sqrt(log d / d) + lambda·logloglog d / sqrt(d·log d),
// theta selects the central-limit regime
//   q = 1/2 - (1/2)·sqrt(log d / d) + theta / sqrt(n).
// Exactly one of lambda/theta must be set; result clamped to [0, 1].
double critical_q(const ThresholdParams& params);

// Standard normal distribution function, |error| well below 1e-7.
double normal_cdf(double x);

// Inverse of normal_cdf on (0, 1); used for Wilson interval z-values.
double normal_quantile(double prob);

struct WilsonInterval {
  double p_hat = 0.0;
  double low = 0.0;
  double high = 0.0;
};

// Wilson score interval; stays sane at successes = 0 or trials.
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double confidence_level);

struct Estimate {
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct CurvePoint {
  std::int64_t m = 0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct ThresholdCurve {
  std::vector<CurvePoint> grid;
};

// Resolves lambda/theta parameterizations to a concrete m or q and checks the
// config invariants. Returns a copy with m (fixed_m) or q (bernoulli_q) set.
ExperimentConfig resolve_config(const ExperimentConfig& config);

// Monte Carlo estimate of the percolation probability: `trials` independent
// runs, each on a fresh G(n,p); fixed_m infects [m] = {0..m-1}, bernoulli_q
// infects each vertex independently with probability q. Deterministic in the
// master seed regardless of thread count.
Estimate estimate_percolation_prob(const ExperimentConfig& config);

// One estimate row per grid size. In shared-graph mode trial k reuses one
// graph across all grid points (initial sets are nested), which makes each
// trial's outcome monotone in m.
ThresholdCurve scan_threshold(const ExperimentConfig& config, std::span<const std::int64_t> m_grid);

// Least-squares nondecreasing fit (pool adjacent violators).
std::vector<double> isotonic_fit(std::span<const double> y, std::span<const double> weight);

// Isotonic-smooths p_hat over m and linearly interpolates the first crossing
// of `level`. Throws if the curve starts at/above level or never reaches it.
double locate_transition(const ThresholdCurve& curve, double level = 0.5);

}  // namespace majoperc
