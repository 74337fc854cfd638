#include "majoperc/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "majoperc/engine.hpp"
#include "majoperc/graph.hpp"
#include "majoperc/parallel.hpp"
#include "majoperc/rng.hpp"

namespace majoperc {

double effective_degree(std::int64_t n, double p) {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("effective_degree: requires 0 <= p < 1");
  if (n < 0) throw std::invalid_argument("effective_degree: n must be >= 0");
  return static_cast<double>(n) * p / (1.0 - p);
}

namespace {

// log d, log log log d and sqrt(d log d) with the d > e^e domain guard.
struct LogTerms {
  double log_d;
  double logloglog_d;
  double sqrt_dlogd;
};

LogTerms log_terms(std::int64_t n, double p) {
  const double d = effective_degree(n, p);
  if (!(d > kMinEffectiveDegree))
    throw std::invalid_argument("threshold formulas require d = np/(1-p) > e^e");
  LogTerms t;
  t.log_d = std::log(d);
  t.logloglog_d = std::log(std::log(t.log_d));
  t.sqrt_dlogd = std::sqrt(d * t.log_d);
  return t;
}

}  // namespace

std::int64_t critical_m(const ThresholdParams& params) {
  if (!params.lambda.has_value()) throw std::invalid_argument("critical_m: lambda not set");
  const double d = effective_degree(params.n, params.p);
  const LogTerms t = log_terms(params.n, params.p);
  const double n = static_cast<double>(params.n);
  const double m = n / 2.0 - (n / 2.0) * std::sqrt(t.log_d / d) +
                   *params.lambda * n * t.logloglog_d / t.sqrt_dlogd;
  return std::clamp<std::int64_t>(std::llround(m), 0, params.n);
}

double critical_q(const ThresholdParams& params) {
  if (params.lambda.has_value() == params.theta.has_value())
    throw std::invalid_argument("critical_q: exactly one of lambda/theta must be set");
  const double d = effective_degree(params.n, params.p);
  const LogTerms t = log_terms(params.n, params.p);
  double q = 0.5 - 0.5 * std::sqrt(t.log_d / d);
  if (params.lambda.has_value())
    q += *params.lambda * t.logloglog_d / t.sqrt_dlogd;
  else
    q += *params.theta / std::sqrt(static_cast<double>(params.n));
  return std::clamp(q, 0.0, 1.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double prob) {
  if (!(prob > 0.0 && prob < 1.0)) throw std::invalid_argument("normal_quantile: prob must be in (0,1)");

  // Acklam's rational approximation, then one Halley step against normal_cdf.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                             1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                             6.680131188771972e+01, -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                             -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                             3.754408661907416e+00};
  const double p_low = 0.02425;

  double x;
  if (prob < p_low) {
    const double u = std::sqrt(-2.0 * std::log(prob));
    x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  } else if (prob <= 1.0 - p_low) {
    const double u = prob - 0.5;
    const double r = u * u;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double u = std::sqrt(-2.0 * std::log(1.0 - prob));
    x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  }

  const double e = normal_cdf(x) - prob;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double confidence_level) {
  if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
  if (successes < 0 || successes > trials) throw std::invalid_argument("wilson_interval: successes out of range");
  if (!(confidence_level > 0.0 && confidence_level < 1.0))
    throw std::invalid_argument("wilson_interval: confidence level must be in (0,1)");

  const double z = normal_quantile(0.5 + confidence_level / 2.0);
  const double t = static_cast<double>(trials);
  const double p_hat = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (p_hat + z2 / (2.0 * t)) / denom;
  const double half = z / denom * std::sqrt(p_hat * (1.0 - p_hat) / t + z2 / (4.0 * t * t));

  WilsonInterval w;
  w.p_hat = p_hat;
  // The interval contains p_hat analytically; the min/max pins that down
  // against rounding residue at successes = 0 or trials.
  w.low = std::min(std::max(0.0, center - half), p_hat);
  w.high = std::max(std::min(1.0, center + half), p_hat);
  return w;
}

ExperimentConfig resolve_config(const ExperimentConfig& config) {
  ExperimentConfig cfg = config;
  if (cfg.n < 1) throw std::invalid_argument("config: n must be >= 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("config: p must be in [0,1]");
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (!(cfg.confidence_level > 0.0 && cfg.confidence_level < 1.0))
    throw std::invalid_argument("config: confidence_level must be in (0,1)");

  const int given = cfg.m.has_value() + cfg.q.has_value() + cfg.lambda.has_value() + cfg.theta.has_value();
  if (!cfg.m_grid.empty()) {
    if (given != 0)
      throw std::invalid_argument("config: m_grid excludes m/q/lambda/theta");
    if (!std::is_sorted(cfg.m_grid.begin(), cfg.m_grid.end()))
      throw std::invalid_argument("config: m_grid must be sorted");
    for (std::int64_t m : cfg.m_grid)
      if (m < 0 || m > cfg.n) throw std::invalid_argument("config: m_grid entry out of [0,n]");
    cfg.mode = InitMode::fixed_m;
    return cfg;
  }
  if (given != 1)
    throw std::invalid_argument("config: exactly one of m/q/lambda/theta must be given");

  if (cfg.m.has_value()) {
    cfg.mode = InitMode::fixed_m;
    if (*cfg.m < 0 || *cfg.m > cfg.n) throw std::invalid_argument("config: m out of [0,n]");
  } else if (cfg.q.has_value()) {
    cfg.mode = InitMode::bernoulli_q;
    if (!(*cfg.q >= 0.0 && *cfg.q <= 1.0)) throw std::invalid_argument("config: q out of [0,1]");
  } else if (cfg.theta.has_value()) {
    cfg.mode = InitMode::bernoulli_q;
    cfg.q = critical_q({cfg.n, cfg.p, std::nullopt, cfg.theta});
  } else {  // lambda: mode decides which formula it feeds
    if (cfg.mode == InitMode::fixed_m)
      cfg.m = critical_m({cfg.n, cfg.p, cfg.lambda, std::nullopt});
    else
      cfg.q = critical_q({cfg.n, cfg.p, cfg.lambda, std::nullopt});
  }
  return cfg;
}

namespace {

// Seed domains. Shared-graph streams ignore the grid point so one graph (and
// one Bernoulli uniform stream) serves every grid point of a trial. The
// independent stream keys on the m value itself, not the grid position, so a
// duplicated grid point reproduces the same row.
std::uint64_t point_base_seed(const ExperimentConfig& cfg, std::int64_t point_key, std::int64_t trial) {
  return cfg.shared_graph
             ? derive_seed(cfg.master_seed, 0x9E3779B9ULL, static_cast<std::uint64_t>(trial))
             : derive_seed(cfg.master_seed, static_cast<std::uint64_t>(point_key) + 1,
                           static_cast<std::uint64_t>(trial));
}

VertexSet bernoulli_initial(std::int64_t n, double q, std::uint64_t seed) {
  SplitMix64 rng(seed);
  VertexSet s(static_cast<int>(n));
  for (std::int64_t v = 0; v < n; ++v)
    if (rng.next_unit() < q) s.add(static_cast<int>(v));
  return s;
}

bool run_one(const Graph& g, const ExperimentConfig& cfg, std::int64_t m, std::uint64_t init_seed) {
  VertexSet initial = cfg.mode == InitMode::fixed_m
                          ? VertexSet::prefix(g.vertex_count(), m)
                          : bernoulli_initial(g.vertex_count(), *cfg.q, init_seed);
  return run_bootstrap(g, initial).percolated;
}

// success[j * trials + k] for grid point j, trial k.
std::vector<std::uint8_t> run_success_matrix(const ExperimentConfig& cfg,
                                             std::span<const std::int64_t> ms) {
  const std::int64_t points = static_cast<std::int64_t>(ms.size());
  std::vector<std::uint8_t> success(static_cast<std::size_t>(points * cfg.trials), 0);

  if (cfg.shared_graph) {
    parallel_for(cfg.trials, cfg.threads, [&](std::int64_t k) {
      const std::uint64_t base = point_base_seed(cfg, 0, k);
      const Graph g = sample_gnp(static_cast<int>(cfg.n), cfg.p, derive_seed(base, 1, 0));
      const std::uint64_t init_seed = derive_seed(base, 2, 0);
      for (std::int64_t j = 0; j < points; ++j)
        success[static_cast<std::size_t>(j * cfg.trials + k)] =
            run_one(g, cfg, ms[static_cast<std::size_t>(j)], init_seed);
    });
  } else {
    parallel_for(points * cfg.trials, cfg.threads, [&](std::int64_t task) {
      const std::int64_t j = task / cfg.trials;
      const std::int64_t k = task % cfg.trials;
      const std::int64_t key = cfg.mode == InitMode::fixed_m ? ms[static_cast<std::size_t>(j)] : 0;
      const std::uint64_t base = point_base_seed(cfg, key, k);
      const Graph g = sample_gnp(static_cast<int>(cfg.n), cfg.p, derive_seed(base, 1, 0));
      success[static_cast<std::size_t>(task)] =
          run_one(g, cfg, ms[static_cast<std::size_t>(j)], derive_seed(base, 2, 0));
    });
  }
  return success;
}

}  // namespace

Estimate estimate_percolation_prob(const ExperimentConfig& config) {
  const ExperimentConfig cfg = resolve_config(config);
  if (!cfg.m_grid.empty())
    throw std::invalid_argument("estimate_percolation_prob: grid configs go through scan_threshold");

  const std::int64_t ms[1] = {cfg.mode == InitMode::fixed_m ? *cfg.m : 0};
  const std::vector<std::uint8_t> success = run_success_matrix(cfg, ms);

  std::int64_t count = 0;
  for (std::int64_t k = 0; k < cfg.trials; ++k) count += success[static_cast<std::size_t>(k)];

  const WilsonInterval w = wilson_interval(count, cfg.trials, cfg.confidence_level);
  return Estimate{cfg.trials, count, w.p_hat, w.low, w.high};
}

ThresholdCurve scan_threshold(const ExperimentConfig& config, std::span<const std::int64_t> m_grid) {
  if (m_grid.empty()) throw std::invalid_argument("scan_threshold: empty grid");
  // The grid argument is the initialization; it replaces whatever the config
  // carried (run_experiment passes the config's own m_grid back through here).
  ExperimentConfig pre = config;
  pre.m.reset();
  pre.q.reset();
  pre.lambda.reset();
  pre.theta.reset();
  pre.m_grid.assign(m_grid.begin(), m_grid.end());
  ExperimentConfig cfg = resolve_config(pre);

  const std::vector<std::uint8_t> success = run_success_matrix(cfg, m_grid);

  ThresholdCurve curve;
  curve.grid.reserve(m_grid.size());
  for (std::size_t j = 0; j < m_grid.size(); ++j) {
    std::int64_t count = 0;
    for (std::int64_t k = 0; k < cfg.trials; ++k)
      count += success[j * static_cast<std::size_t>(cfg.trials) + static_cast<std::size_t>(k)];
    const WilsonInterval w = wilson_interval(count, cfg.trials, cfg.confidence_level);
    curve.grid.push_back(CurvePoint{m_grid[j], cfg.trials, count, w.p_hat, w.low, w.high});
  }
  return curve;
}

std::vector<double> isotonic_fit(std::span<const double> y, std::span<const double> weight) {
  if (!weight.empty() && weight.size() != y.size())
    throw std::invalid_argument("isotonic_fit: weight length mismatch");

  struct Block {
    double value;
    double weight;
    std::size_t count;
  };
  std::vector<Block> blocks;
  blocks.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    blocks.push_back({y[i], weight.empty() ? 1.0 : weight[i], 1});
    while (blocks.size() >= 2 && blocks[blocks.size() - 2].value > blocks.back().value) {
      const Block top = blocks.back();
      blocks.pop_back();
      Block& prev = blocks.back();
      const double w = prev.weight + top.weight;
      prev.value = (prev.value * prev.weight + top.value * top.weight) / w;
      prev.weight = w;
      prev.count += top.count;
    }
  }

  std::vector<double> fit;
  fit.reserve(y.size());
  for (const Block& b : blocks) fit.insert(fit.end(), b.count, b.value);
  return fit;
}

double locate_transition(const ThresholdCurve& curve, double level) {
  const auto& grid = curve.grid;
  if (grid.size() < 2) throw std::invalid_argument("locate_transition: need at least 2 grid points");
  if (!std::is_sorted(grid.begin(), grid.end(),
                      [](const CurvePoint& a, const CurvePoint& b) { return a.m < b.m; }))
    throw std::invalid_argument("locate_transition: curve not sorted by m");

  std::vector<double> y, w;
  y.reserve(grid.size());
  w.reserve(grid.size());
  for (const CurvePoint& pt : grid) {
    y.push_back(pt.p_hat);
    w.push_back(static_cast<double>(pt.trials));
  }
  const std::vector<double> fit = isotonic_fit(y, w);

  std::size_t i = 0;
  while (i < fit.size() && fit[i] < level) ++i;
  if (i == fit.size()) throw std::runtime_error("locate_transition: no crossing of level");
  if (i == 0) throw std::invalid_argument("locate_transition: curve starts at or above level");

  const double m0 = static_cast<double>(grid[i - 1].m);
  const double m1 = static_cast<double>(grid[i].m);
  return m0 + (level - fit[i - 1]) * (m1 - m0) / (fit[i] - fit[i - 1]);
}

}  // namespace majoperc
