#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majoperc/graph.hpp"

namespace majoperc {

struct BinomialSpec {
  std::int64_t n = 0;  // trial count
  double p = 0.0;      // success probability
};

// Parameters for the two-binomial bounds: X1 = B(N-S, p) and, depending on
// the bound, X2 = B(N+S, 1-p) or Z2 = B(N+S-T, p). N, S, T may be
// half-integers; trial counts are rounded to nearest when a concrete
// distribution is needed.
struct TwoBinomialSpec {
  double capital_n = 0.0;  // N
  double s = 0.0;          // S
  double t_shift = 0.0;    // T
  double p = 0.0;
};

// --- exact oracles ----------------------------------------------------------

double binom_log_pmf(const BinomialSpec& spec, std::int64_t k);

// P(B(n,p) = k), log-gamma route. Relative error ~1e-12 on desk-scale n.
double binom_pmf_exact(const BinomialSpec& spec, std::int64_t k);

enum class TailDirection { at_least, at_most };

// Exact cumulative probability; the smaller tail is summed term by term with
// compensated accumulation, the larger is taken as its complement.
double binom_tail_exact(const BinomialSpec& spec, std::int64_t k, TailDirection dir);

enum class CompareMode { at_least, equal };

// P(X1 >= X2 + k) or P(X1 = X2 + k) for independent binomials, by direct
// convolution; O(n1 + n2) after the pmf arrays. k may be negative.
double two_binom_compare_exact(const BinomialSpec& x1, const BinomialSpec& x2,
                               std::int64_t k, CompareMode mode);

// --- exact finite-n bounds (hard-asserted against the oracles) --------------

// Pointwise lower bound on P(B(n,p) = k) at k = pn + h, h > 0, valid for
// pn >= 1 and k < n; includes the exact beta = 1/(12k) + 1/(12(n-k)) term.
double bollobas_pmf_lower(const BinomialSpec& spec, std::int64_t k);

// Pointwise upper bound on P(B(n,p) = k) for k >= pn + h with h(1-p)n >= 3.
double bollobas_pmf_upper(const BinomialSpec& spec, std::int64_t k, double h);

// exp(-t^2 / (2·sum_var + (2/3)·m_bound·t)): upper bound on the probability
// that a sum of independent zero-mean variables, each |X_i| <= m_bound with
// total variance sum_var, exceeds t.
double bernstein_tail(double sum_var, double m_bound, double t);

// --- leading-form asymptotic bounds (no finite-n guarantee) -----------------

enum class AsymptoticKind {
  cum_upper,            // P(B(n,p) >= pn+h) upper
  cum_lower,            // P(B(n,p) >= pn+h) lower
  twobinom_lower,       // P(X1+X2 >= mu1+mu2+h) lower
  twobinom_upper,       // P(X1+X2 >= mu1+mu2+h) upper
  twobinom_diff_upper,  // P(Z1 = Z2 + pT) upper
};

struct AsymptoticParams {
  BinomialSpec binom{};   // cum_* kinds
  TwoBinomialSpec two{};  // twobinom_* kinds
  double h = 0.0;         // deviation (unused by twobinom_diff_upper)
};

// Evaluates the selected bound with every o(1)/omega(·) term dropped. Returns
// the leading-form value; direction is NOT guaranteed at finite n.
double asymptotic_bound_eval(AsymptoticKind kind, const AsymptoticParams& params);

// --- log-concavity -----------------------------------------------------------

// f(k-1)·f(k+1) <= f(k)^2 for all interior k (1e-12 slack on cross-products).
// The pmf must be non-negative and sum to 1 within 1e-9.
bool logconcavity_check(std::span<const double> pmf);

// Same check applied to the cumulative sequence of the pmf.
bool logconcavity_check_cumulative(std::span<const double> pmf);

// --- audit reports -----------------------------------------------------------

enum class BoundId {
  bollobas_pmf_lower,
  bollobas_pmf_upper,
  bernstein_tail,
  cum_upper,
  cum_lower,
  twobinom_lower,
  twobinom_upper,
  twobinom_diff_upper,
};

const char* bound_id_name(BoundId id);

// One bound evaluation against its exact oracle. slack is oriented so that
// slack >= 0 means the inequality holds (bound - exact for upper bounds,
// exact - bound for lower bounds). asymptotic marks bounds whose o(1) terms
// were dropped; those make no finite-n promise and their slack sign is
// recorded, not asserted.
struct BoundReport {
  BoundId id{};
  std::vector<std::pair<std::string, double>> params;
  double bound_value = 0.0;
  double exact_value = 0.0;
  double slack = 0.0;
  std::vector<std::pair<std::string, bool>> validity;
  bool valid = true;  // conjunction of the validity flags
  bool asymptotic = false;
};

BoundReport report_bollobas_lower(const BinomialSpec& spec, std::int64_t k);
BoundReport report_bollobas_upper(const BinomialSpec& spec, std::int64_t k, double h);
// Bernstein specialized to a centered binomial: X_i = Bernoulli(p) - p.
BoundReport report_bernstein_binomial(const BinomialSpec& spec, double t);
BoundReport report_asymptotic(AsymptoticKind kind, const AsymptoticParams& params);

// Canned sweep over the bound's validity grid (the grids the hard suite
// asserts on; asymptotic kinds get the same grids diagnostically).
std::vector<BoundReport> sweep_bound(BoundId id);

void write_bound_reports_csv(std::ostream& out, std::span<const BoundReport> reports);

// --- edge-count audits -------------------------------------------------------

enum class EdgeProp {
  within_upper,          // |E(S)| <= p·C(t,2) + 2t·sqrt(p(1-p)t),  t > n/5
  boundary_lower,        // |E(S, S^c)| >= p·t(n-t) - 3t·sqrt(p(1-p)(n-t)),  n/5 < t <= n/2
  within_at_most_2t,     // |E(S)| <= 2t,  log n < pn <= 5 log n, t <= n^(29/30)
  boundary_twice_within,       // |E(S,S^c)| >= 2|E(S)|,  p(1-p)n >= 4 log n, t <= n/5
  boundary_twice_within_sparse // same inequality, pn >= log n, n^(24/25) <= t <= n/5
};

const char* edge_prop_name(EdgeProp prop);

struct EdgeAuditRow {
  EdgeProp prop{};
  bool applicable = false;  // the (n, p, t) regime of the proposition holds
  std::int64_t checked = 0;
  std::int64_t violations = 0;
};

struct EdgeAuditReport {
  std::int64_t n = 0;
  double p = 0.0;
  std::int64_t set_size = 0;
  std::int64_t samples = 0;
  std::vector<EdgeAuditRow> rows;
  bool min_degree_regime = false;  // pn > log n
  int min_degree = 0;
  bool min_degree_gt8 = false;
};

// Samples uniform vertex sets of the given size and checks each edge-count
// proposition on its applicable regime. Requires g to carry its generating p.
EdgeAuditReport audit_edge_bounds(const Graph& g, std::int64_t set_size,
                                  std::int64_t samples, std::uint64_t seed);

void write_edge_audit_csv(std::ostream& out, const EdgeAuditReport& report);

}  // namespace majoperc
