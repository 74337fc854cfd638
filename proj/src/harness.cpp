#include "majoperc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "majoperc/binbounds.hpp"
#include "majoperc/closedset.hpp"
#include "majoperc/engine.hpp"
#include "majoperc/graph.hpp"
#include "majoperc/rng.hpp"

namespace majoperc {

namespace {

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void config_error(int line, const std::string& msg) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& v, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    config_error(line, "'" + key + "' expects an integer, got '" + v + "'");
  }
}

std::uint64_t parse_uint(const std::string& v, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != v.size() || (!v.empty() && v[0] == '-')) throw std::invalid_argument("");
    return x;
  } catch (...) {
    config_error(line, "'" + key + "' expects a non-negative integer, got '" + v + "'");
  }
}

double parse_real(const std::string& v, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    config_error(line, "'" + key + "' expects a number, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  config_error(line, "'" + key + "' expects true/false, got '" + v + "'");
}

// Size expression: plain integer, or `<real>n` / `n` meaning a fraction of n.
std::int64_t parse_size_expr(const std::string& v, std::int64_t n, int line, const std::string& key) {
  if (v == "n") return n;
  if (!v.empty() && v.back() == 'n') {
    const double frac = parse_real(v.substr(0, v.size() - 1), line, key);
    return std::llround(frac * static_cast<double>(n));
  }
  return parse_int(v, line, key);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::int64_t> parse_grid_expr(const std::string& v, std::int64_t n, int line) {
  std::vector<std::int64_t> grid;
  if (v.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split(v, ':');
    if (parts.size() != 3) config_error(line, "'m_grid' range expects start:stop:count");
    const std::int64_t a = parse_size_expr(parts[0], n, line, "m_grid");
    const std::int64_t b = parse_size_expr(parts[1], n, line, "m_grid");
    const std::int64_t count = parse_int(parts[2], line, "m_grid");
    if (count < 2) config_error(line, "'m_grid' range needs count >= 2");
    for (std::int64_t i = 0; i < count; ++i)
      grid.push_back(std::llround(static_cast<double>(a) +
                                  static_cast<double>(b - a) * static_cast<double>(i) /
                                      static_cast<double>(count - 1)));
  } else {
    for (const std::string& item : split(v, ','))
      grid.push_back(parse_size_expr(item, n, line, "m_grid"));
  }
  return grid;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::map<std::string, int> seen;             // key -> line
  std::map<std::string, std::string> raw_size; // size expressions resolved after n is known
  std::map<std::string, int> raw_line;
  std::optional<InitMode> explicit_mode;
  bool have_n = false, have_p = false;

  std::string line_text;
  int line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    const auto hash = line_text.find('#');
    if (hash != std::string::npos) line_text.erase(hash);
    const std::string body = trim(line_text);
    if (body.empty()) continue;

    const auto eq = body.find('=');
    if (eq == std::string::npos) config_error(line, "expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) config_error(line, "missing key before '='");
    if (value.empty()) config_error(line, "missing value for '" + key + "'");

    if (auto it = seen.find(key); it != seen.end())
      config_error(line, "duplicate key '" + key + "' (first seen on line " + std::to_string(it->second) + ")");
    seen[key] = line;

    static const char* init_keys[] = {"m", "q", "lambda", "theta", "m_grid"};
    const bool is_init = std::find(std::begin(init_keys), std::end(init_keys), key) != std::end(init_keys);
    if (is_init) {
      for (const char* other : init_keys) {
        if (other == key) continue;
        if (auto it = seen.find(other); it != seen.end())
          config_error(line, "'" + key + "' conflicts with '" + std::string(other) + "' (line " +
                                 std::to_string(it->second) + "); give exactly one initialization");
      }
    }

    if (key == "n") {
      cfg.n = parse_int(value, line, key);
      have_n = true;
    } else if (key == "p") {
      cfg.p = parse_real(value, line, key);
      have_p = true;
    } else if (key == "mode") {
      if (value == "fixed_m") explicit_mode = InitMode::fixed_m;
      else if (value == "bernoulli_q") explicit_mode = InitMode::bernoulli_q;
      else config_error(line, "'mode' expects fixed_m or bernoulli_q, got '" + value + "'");
    } else if (key == "m" || key == "m_grid") {
      raw_size[key] = value;
      raw_line[key] = line;
    } else if (key == "q") {
      cfg.q = parse_real(value, line, key);
    } else if (key == "lambda") {
      cfg.lambda = parse_real(value, line, key);
    } else if (key == "theta") {
      cfg.theta = parse_real(value, line, key);
    } else if (key == "trials") {
      cfg.trials = parse_int(value, line, key);
    } else if (key == "master_seed") {
      cfg.master_seed = parse_uint(value, line, key);
    } else if (key == "confidence_level") {
      cfg.confidence_level = parse_real(value, line, key);
    } else if (key == "shared_graph") {
      cfg.shared_graph = parse_bool(value, line, key);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else {
      config_error(line, "unknown key '" + key + "'");
    }
  }

  if (!have_n) throw std::runtime_error("config: missing required key 'n'");
  if (!have_p) throw std::runtime_error("config: missing required key 'p'");

  if (auto it = raw_size.find("m"); it != raw_size.end())
    cfg.m = parse_size_expr(it->second, cfg.n, raw_line["m"], "m");
  if (auto it = raw_size.find("m_grid"); it != raw_size.end())
    cfg.m_grid = parse_grid_expr(it->second, cfg.n, raw_line["m_grid"]);

  if (explicit_mode.has_value()) {
    cfg.mode = *explicit_mode;
    if (*explicit_mode == InitMode::fixed_m && (cfg.q.has_value() || cfg.theta.has_value()))
      throw std::runtime_error("config: mode fixed_m conflicts with q/theta");
    if (*explicit_mode == InitMode::bernoulli_q && (cfg.m.has_value() || !cfg.m_grid.empty()))
      throw std::runtime_error("config: mode bernoulli_q conflicts with m/m_grid");
  }

  resolve_config(cfg);  // full validation now; rerun (cheaply) at execution time
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  return parse_config(in);
}

namespace {

void echo_config(std::ostream& out, const ExperimentConfig& given, const ExperimentConfig& resolved) {
  out << "# n = " << resolved.n << '\n';
  out << "# p = " << g17(resolved.p) << '\n';
  out << "# mode = " << (resolved.mode == InitMode::fixed_m ? "fixed_m" : "bernoulli_q") << '\n';
  out << "# trials = " << resolved.trials << '\n';
  out << "# master_seed = " << resolved.master_seed << '\n';
  out << "# confidence_level = " << g17(resolved.confidence_level) << '\n';
  out << "# shared_graph = " << (resolved.shared_graph ? "true" : "false") << '\n';
  if (given.lambda.has_value()) out << "# lambda = " << g17(*given.lambda) << '\n';
  if (given.theta.has_value()) out << "# theta = " << g17(*given.theta) << '\n';
  if (resolved.m.has_value()) out << "# m = " << *resolved.m << '\n';
  if (resolved.q.has_value()) out << "# q = " << g17(*resolved.q) << '\n';
}

void write_curve_rows(std::ostream& out, const ThresholdCurve& curve) {
  out << "m,trials,successes,p_hat,ci_low,ci_high\n";
  for (const CurvePoint& pt : curve.grid)
    out << pt.m << ',' << pt.trials << ',' << pt.successes << ',' << g17(pt.p_hat) << ','
        << g17(pt.ci_low) << ',' << g17(pt.ci_high) << '\n';
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  result.resolved = resolve_config(config);  // rejects invalid configs before any work

  std::ostringstream csv;
  echo_config(csv, config, result.resolved);

  if (!result.resolved.m_grid.empty()) {
    result.is_curve = true;
    result.curve = scan_threshold(config, result.resolved.m_grid);
    write_curve_rows(csv, result.curve);
  } else {
    result.estimate = estimate_percolation_prob(config);
    const Estimate& e = result.estimate;
    if (result.resolved.mode == InitMode::fixed_m) {
      csv << "m,trials,successes,p_hat,ci_low,ci_high\n";
      csv << *result.resolved.m;
    } else {
      csv << "q,trials,successes,p_hat,ci_low,ci_high\n";
      csv << g17(*result.resolved.q);
    }
    csv << ',' << e.trials << ',' << e.successes << ',' << g17(e.p_hat) << ',' << g17(e.ci_low)
        << ',' << g17(e.ci_high) << '\n';
  }

  result.csv = csv.str();
  if (!result.resolved.output_path.empty()) {
    std::ofstream out(result.resolved.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + result.resolved.output_path);
    out << result.csv;
    if (!out) throw std::runtime_error("write failed: " + result.resolved.output_path);
  }
  return result;
}

// --- CLI ----------------------------------------------------------------------

namespace {

int resolve_threads(int flag_value) {
  if (const char* env = std::getenv("MAJOPERC_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid MAJOPERC_THREADS='" << env << "'\n";
  }
  return std::max(1, flag_value);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + out_path);
}

std::vector<std::int64_t> cli_grid(const std::string& spec, std::int64_t n) {
  std::vector<std::int64_t> grid = parse_grid_expr(spec, n, 0);
  std::sort(grid.begin(), grid.end());
  return grid;
}

struct SimulateArgs {
  std::string config_path;
  std::int64_t n = 0;
  double p = 0.0;
  std::string m_expr, grid_expr, lambda_grid_expr;
  double q = 0.0, lambda = 0.0, theta = 0.0;
  bool has_q = false, has_lambda = false, has_theta = false;
  std::int64_t trials = 100;
  double confidence = 0.95;
  bool shared_graph = false;
  std::string mode;
};

ExperimentConfig build_config(const SimulateArgs& a, bool scan, bool seed_given, std::uint64_t seed,
                              int threads, const std::string& out_path) {
  ExperimentConfig cfg;
  if (!a.config_path.empty()) {
    cfg = parse_config_file(a.config_path);
  } else {
    cfg.n = a.n;
    cfg.p = a.p;
    if (!a.m_expr.empty()) cfg.m = parse_size_expr(a.m_expr, cfg.n, 0, "m");
    if (a.has_q) cfg.q = a.q;
    if (a.has_lambda) cfg.lambda = a.lambda;
    if (a.has_theta) cfg.theta = a.theta;
    cfg.trials = a.trials;
    cfg.confidence_level = a.confidence;
    cfg.shared_graph = a.shared_graph;
    cfg.master_seed = seed;
    if (a.mode == "bernoulli_q") cfg.mode = InitMode::bernoulli_q;
    if (scan) {
      if (!a.grid_expr.empty()) {
        cfg.m_grid = cli_grid(a.grid_expr, cfg.n);
      } else if (!a.lambda_grid_expr.empty()) {
        for (const std::string& item : split(a.lambda_grid_expr, ',')) {
          ThresholdParams tp{cfg.n, cfg.p, std::stod(item), std::nullopt};
          cfg.m_grid.push_back(critical_m(tp));
        }
        std::sort(cfg.m_grid.begin(), cfg.m_grid.end());
      }
    }
  }
  if (seed_given) cfg.master_seed = seed;  // explicit --seed overrides the config file
  cfg.threads = threads;
  if (!out_path.empty()) cfg.output_path = out_path;
  return cfg;
}

}  // namespace

int cli(int argc, const char* const* argv) {
  CLI::App app{"majority bootstrap percolation laboratory"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int threads_flag = 1;
  std::string out_path;
  app.add_option("--seed", seed, "master seed (default 0; overrides config files when nonzero)");
  app.add_option("--threads", threads_flag, "worker threads (MAJOPERC_THREADS env overrides)");
  app.add_option("--out", out_path, "output file (default stdout)");

  SimulateArgs sim;

  CLI::App* simulate = app.add_subcommand("simulate", "estimate percolation probability at one point");
  simulate->fallthrough();
  simulate->add_option("--config", sim.config_path, "key = value config file");
  simulate->add_option("--n", sim.n, "vertex count");
  simulate->add_option("--p", sim.p, "edge probability");
  simulate->add_option("--m", sim.m_expr, "initial set size (accepts 0.45n forms)");
  simulate->add_option("--q", sim.q, "Bernoulli infection probability");
  simulate->add_option("--lambda", sim.lambda, "window position; resolved via the critical-size formula");
  simulate->add_option("--theta", sim.theta, "CLT-regime position; resolved via the critical-q formula");
  simulate->add_option("--trials", sim.trials, "Monte Carlo trials");
  simulate->add_option("--confidence", sim.confidence, "Wilson interval confidence level");
  simulate->add_flag("--shared-graph", sim.shared_graph, "reuse one graph per trial across grid points");
  simulate->add_option("--mode", sim.mode, "fixed_m | bernoulli_q (disambiguates --lambda)");

  CLI::App* scan = app.add_subcommand("scan", "threshold curve over an m or lambda grid");
  scan->fallthrough();
  scan->add_option("--config", sim.config_path, "key = value config file");
  scan->add_option("--n", sim.n, "vertex count");
  scan->add_option("--p", sim.p, "edge probability");
  scan->add_option("--grid", sim.grid_expr, "m grid: comma list or start:stop:count (0.4n forms ok)");
  scan->add_option("--lambda-grid", sim.lambda_grid_expr, "comma list of lambda values");
  scan->add_option("--trials", sim.trials, "Monte Carlo trials per grid point");
  scan->add_option("--confidence", sim.confidence, "Wilson interval confidence level");
  scan->add_flag("--shared-graph", sim.shared_graph, "reuse one graph per trial across grid points");

  std::string graph_path, set_spec;
  bool enumerate = false;
  CLI::App* closed = app.add_subcommand("closed", "closed-set queries on an edge-list graph");
  closed->fallthrough();
  closed->add_option("--graph", graph_path, "edge-list file (first line 'n m', then 'u v' lines)")->required();
  closed->add_option("--set", set_spec, "comma list of vertices; prints is_closed");
  closed->add_flag("--enumerate", enumerate, "list every closed set (n <= 22)");

  std::string bound_id = "all";
  std::int64_t audit_n = 10000, audit_samples = 1000;
  double audit_p = 0.05;
  std::string audit_t_expr = "0.25n";
  CLI::App* bounds = app.add_subcommand("bounds", "bound audit sweeps (CSV)");
  bounds->fallthrough();
  bounds->add_option("--id", bound_id,
                     "bound id, 'all', or 'edge_bounds' (bollobas_pmf_lower, bollobas_pmf_upper, "
                     "bernstein_tail, cum_upper, cum_lower, twobinom_lower, twobinom_upper, "
                     "twobinom_diff_upper)");
  bounds->add_option("--n", audit_n, "graph size for edge_bounds");
  bounds->add_option("--p", audit_p, "edge probability for edge_bounds");
  bounds->add_option("--t", audit_t_expr, "sampled set size for edge_bounds (0.25n forms ok)");
  bounds->add_option("--samples", audit_samples, "sampled sets for edge_bounds");

  std::int64_t phase_trials = 200;
  CLI::App* phase = app.add_subcommand(
      "reproduce-phase", "canned desk-scale transition scan: n=50000, p=0.01, 12 points in [0.40n, 0.48n]");
  phase->fallthrough();
  phase->add_option("--trials", phase_trials, "trials per grid point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  sim.has_q = simulate->count("--q") > 0;
  sim.has_lambda = simulate->count("--lambda") > 0;
  sim.has_theta = simulate->count("--theta") > 0;
  const bool seed_given = app.count("--seed") > 0;
  const int threads = resolve_threads(threads_flag);

  try {
    if (simulate->parsed() || scan->parsed()) {
      const ExperimentConfig cfg = build_config(sim, scan->parsed(), seed_given, seed, threads, out_path);
      const ExperimentResult result = run_experiment(cfg);
      if (result.resolved.output_path.empty()) std::cout << result.csv;
      return 0;
    }

    if (closed->parsed()) {
      const bool set_given = closed->count("--set") > 0;
      if (enumerate == set_given) {  // exactly one of the two queries
        std::cerr << "closed: give exactly one of --set or --enumerate\n";
        return 1;
      }
      const Graph g = load_edge_list(graph_path);
      if (enumerate) {
        std::ostringstream text;
        for (const VertexSet& s : enumerate_closed_sets(g)) {
          const auto& e = s.elements();
          for (std::size_t i = 0; i < e.size(); ++i) text << (i ? "," : "") << e[i];
          text << '\n';
        }
        emit(text.str(), out_path);
      } else {
        std::vector<int> elems;
        if (!set_spec.empty())
          for (const std::string& item : split(set_spec, ','))
            elems.push_back(static_cast<int>(std::stoll(item)));
        const VertexSet s = VertexSet::from_elements(g.vertex_count(), std::move(elems));
        emit(is_closed(g, s) ? "true\n" : "false\n", out_path);
      }
      return 0;
    }

    if (bounds->parsed()) {
      std::ostringstream text;
      if (bound_id == "edge_bounds") {
        const std::int64_t t = parse_size_expr(audit_t_expr, audit_n, 0, "t");
        const Graph g = sample_gnp(static_cast<int>(audit_n), audit_p, seed);
        write_edge_audit_csv(text, audit_edge_bounds(g, t, audit_samples, derive_seed(seed, 0xED6E, 0)));
      } else {
        static const BoundId ids[] = {BoundId::bollobas_pmf_lower, BoundId::bollobas_pmf_upper,
                                      BoundId::bernstein_tail,     BoundId::cum_upper,
                                      BoundId::cum_lower,          BoundId::twobinom_lower,
                                      BoundId::twobinom_upper,     BoundId::twobinom_diff_upper};
        std::vector<BoundReport> reports;
        bool matched = false;
        for (BoundId id : ids) {
          if (bound_id == "all" || bound_id == bound_id_name(id)) {
            matched = true;
            std::vector<BoundReport> r = sweep_bound(id);
            reports.insert(reports.end(), r.begin(), r.end());
          }
        }
        if (!matched) throw std::runtime_error("unknown bound id: " + bound_id);
        write_bound_reports_csv(text, reports);
      }
      emit(text.str(), out_path);
      return 0;
    }

    if (phase->parsed()) {
      ExperimentConfig cfg;
      cfg.n = 50000;
      cfg.p = 0.01;
      cfg.trials = phase_trials;
      cfg.master_seed = seed != 0 ? seed : 20260808ULL;
      cfg.shared_graph = true;
      cfg.threads = threads;
      cfg.output_path = out_path;
      for (int i = 0; i < 12; ++i)
        cfg.m_grid.push_back(std::llround(0.40 * 50000 + (0.08 * 50000) * i / 11.0));
      const ExperimentResult result = run_experiment(cfg);
      if (result.resolved.output_path.empty()) std::cout << result.csv;
      std::cerr << "transition at m ~ " << g17(locate_transition(result.curve, 0.5)) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace majoperc
