#include "majoperc/binbounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "majoperc/rng.hpp"

namespace majoperc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void check_spec(const BinomialSpec& spec, const char* who) {
  if (spec.n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument(std::string(who) + ": p must be in [0,1]");
}

double log_choose(std::int64_t n, std::int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

std::vector<double> pmf_array(const BinomialSpec& spec) {
  std::vector<double> f(static_cast<std::size_t>(spec.n) + 1);
  for (std::int64_t k = 0; k <= spec.n; ++k) f[static_cast<std::size_t>(k)] = binom_pmf_exact(spec, k);
  return f;
}

}  // namespace

double binom_log_pmf(const BinomialSpec& spec, std::int64_t k) {
  check_spec(spec, "binom_log_pmf");
  if (k < 0 || k > spec.n) throw std::invalid_argument("binom_log_pmf: k out of [0, n]");
  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  if (spec.p == 0.0) return k == 0 ? 0.0 : neg_inf;
  if (spec.p == 1.0) return k == spec.n ? 0.0 : neg_inf;
  return log_choose(spec.n, k) + static_cast<double>(k) * std::log(spec.p) +
         static_cast<double>(spec.n - k) * std::log1p(-spec.p);
}

double binom_pmf_exact(const BinomialSpec& spec, std::int64_t k) {
  return std::exp(binom_log_pmf(spec, k));
}

double binom_tail_exact(const BinomialSpec& spec, std::int64_t k, TailDirection dir) {
  check_spec(spec, "binom_tail_exact");
  if (k < 0 || k > spec.n) throw std::invalid_argument("binom_tail_exact: k out of [0, n]");
  const double mean = static_cast<double>(spec.n) * spec.p;

  // Small-end sums: terms grow toward the mean, so start from the far end.
  const auto sum_lower = [&](std::int64_t hi) {  // P(X <= hi)
    KahanSum s;
    for (std::int64_t j = 0; j <= hi; ++j) s.add(binom_pmf_exact(spec, j));
    return s.value();
  };
  const auto sum_upper = [&](std::int64_t lo) {  // P(X >= lo)
    KahanSum s;
    for (std::int64_t j = spec.n; j >= lo; --j) s.add(binom_pmf_exact(spec, j));
    return s.value();
  };

  if (dir == TailDirection::at_least) {
    if (k == 0) return 1.0;
    if (static_cast<double>(k) > mean) return clamp01(sum_upper(k));
    return clamp01(1.0 - sum_lower(k - 1));
  }
  if (k == spec.n) return 1.0;
  if (static_cast<double>(k) < mean) return clamp01(sum_lower(k));
  return clamp01(1.0 - sum_upper(k + 1));
}

double two_binom_compare_exact(const BinomialSpec& x1, const BinomialSpec& x2,
                               std::int64_t k, CompareMode mode) {
  check_spec(x1, "two_binom_compare_exact");
  check_spec(x2, "two_binom_compare_exact");
  const std::vector<double> f1 = pmf_array(x1);
  const std::vector<double> f2 = pmf_array(x2);
  const std::int64_t n1 = x1.n;

  if (mode == CompareMode::equal) {
    KahanSum total;
    for (std::int64_t j = 0; j <= x2.n; ++j) {
      const std::int64_t i = j + k;
      if (i >= 0 && i <= n1) total.add(f2[static_cast<std::size_t>(j)] * f1[static_cast<std::size_t>(i)]);
    }
    return clamp01(total.value());
  }

  // suffix[i] = P(X1 >= i); accumulate upward from the small tail.
  std::vector<double> suffix(static_cast<std::size_t>(n1) + 2, 0.0);
  {
    KahanSum s;
    for (std::int64_t i = n1; i >= 0; --i) {
      s.add(f1[static_cast<std::size_t>(i)]);
      suffix[static_cast<std::size_t>(i)] = std::min(1.0, s.value());
    }
  }
  KahanSum total;
  for (std::int64_t j = 0; j <= x2.n; ++j) {
    const std::int64_t i = j + k;
    const double tail = i <= 0 ? 1.0 : (i > n1 ? 0.0 : suffix[static_cast<std::size_t>(i)]);
    total.add(f2[static_cast<std::size_t>(j)] * tail);
  }
  return clamp01(total.value());
}

double bollobas_pmf_lower(const BinomialSpec& spec, std::int64_t k) {
  check_spec(spec, "bollobas_pmf_lower");
  const double n = static_cast<double>(spec.n);
  const double p = spec.p;
  if (!(p * n >= 1.0)) throw std::invalid_argument("bollobas_pmf_lower: requires pn >= 1");
  if (k >= spec.n) throw std::invalid_argument("bollobas_pmf_lower: requires k < n");
  const double h = static_cast<double>(k) - p * n;
  if (!(h > 0.0)) throw std::invalid_argument("bollobas_pmf_lower: requires h = k - pn > 0");

  const double kd = static_cast<double>(k);
  const double beta = 1.0 / (12.0 * kd) + 1.0 / (12.0 * (n - kd));
  const double v = p * (1.0 - p) * n;
  const double exponent = -h * h / (2.0 * v)
                          - h * h * h / (2.0 * (1.0 - p) * (1.0 - p) * n * n)
                          - h * h * h * h / (3.0 * p * p * p * n * n * n)
                          - h / (2.0 * p * n)
                          - beta;
  return std::exp(exponent) / std::sqrt(kTwoPi * v);
}

double bollobas_pmf_upper(const BinomialSpec& spec, std::int64_t k, double h) {
  check_spec(spec, "bollobas_pmf_upper");
  const double n = static_cast<double>(spec.n);
  const double p = spec.p;
  if (!(p * n >= 1.0)) throw std::invalid_argument("bollobas_pmf_upper: requires pn >= 1");
  if (static_cast<double>(k) < p * n + h - 1e-9 * std::max(1.0, std::abs(h)))
    throw std::invalid_argument("bollobas_pmf_upper: requires k >= pn + h");
  if (!(h * (1.0 - p) * n >= 3.0)) throw std::invalid_argument("bollobas_pmf_upper: requires h(1-p)n >= 3");

  const double v = p * (1.0 - p) * n;
  const double exponent = -h * h / (2.0 * v)
                          + h * h * h / (p * p * n * n)
                          + h / ((1.0 - p) * n);
  return std::exp(exponent) / std::sqrt(kTwoPi * v);
}

double bernstein_tail(double sum_var, double m_bound, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("bernstein_tail: requires t > 0");
  if (!(sum_var >= 0.0)) throw std::invalid_argument("bernstein_tail: requires sum_var >= 0");
  if (!(m_bound > 0.0)) throw std::invalid_argument("bernstein_tail: requires m_bound > 0");
  return std::exp(-t * t / (2.0 * sum_var + (2.0 / 3.0) * m_bound * t));
}

double asymptotic_bound_eval(AsymptoticKind kind, const AsymptoticParams& params) {
  switch (kind) {
    case AsymptoticKind::cum_upper:
    case AsymptoticKind::cum_lower: {
      const double n = static_cast<double>(params.binom.n);
      const double p = params.binom.p;
      const double h = params.h;
      if (!(n > 0.0) || !(p > 0.0 && p < 1.0)) throw std::invalid_argument("asymptotic_bound_eval: need n > 0, 0 < p < 1");
      if (!(h > 0.0)) throw std::invalid_argument("asymptotic_bound_eval: need h > 0");
      const double v = p * (1.0 - p) * n;
      const double lead = std::sqrt(v) / (std::sqrt(kTwoPi) * h);
      if (kind == AsymptoticKind::cum_upper) return lead * std::exp(-h * h / (2.0 * v));
      return lead * std::exp(-h * h / (2.0 * v) - 1.5);
    }
    case AsymptoticKind::twobinom_lower:
    case AsymptoticKind::twobinom_upper: {
      const double cn = params.two.capital_n;
      const double p = params.two.p;
      const double h = params.h;
      if (!(cn > 0.0) || !(p > 0.0 && p < 1.0)) throw std::invalid_argument("asymptotic_bound_eval: need N > 0, 0 < p < 1");
      if (!(h > 0.0)) throw std::invalid_argument("asymptotic_bound_eval: need h > 0");
      const double w = 2.0 * p * (1.0 - p) * cn;
      if (kind == AsymptoticKind::twobinom_lower)
        return std::sqrt(w) / (kTwoPi * h) * std::exp(-h * h / (2.0 * w) - 4.0);
      return std::sqrt(w) / h * std::exp(-h * h / (2.0 * w) + 3.0);
    }
    case AsymptoticKind::twobinom_diff_upper: {
      const double cn = params.two.capital_n;
      const double s = params.two.s;
      const double t = params.two.t_shift;
      const double p = params.two.p;
      if (!(cn > 0.0) || !(p > 0.0 && p < 1.0)) throw std::invalid_argument("asymptotic_bound_eval: need N > 0, 0 < p < 1");
      if (!(s > 0.0)) throw std::invalid_argument("asymptotic_bound_eval: need S > 0");
      if (!(2.0 * cn - t > 0.0)) throw std::invalid_argument("asymptotic_bound_eval: need 2N - T > 0");
      const double first = s / (kTwoPi * (1.0 - p) * cn) *
                           std::exp(-2.0 * p * s * s / ((1.0 - p) * (2.0 * cn - t)));
      const double second = 3.0 / (std::numbers::pi * p * s) *
                            std::exp(-9.0 * p * s * s / (8.0 * (1.0 - p) * cn));
      return first + second;
    }
  }
  throw std::invalid_argument("asymptotic_bound_eval: unknown kind");
}

namespace {

void check_pmf(std::span<const double> pmf) {
  KahanSum s;
  for (double x : pmf) {
    if (!(x >= 0.0)) throw std::invalid_argument("logconcavity_check: negative pmf entry");
    s.add(x);
  }
  if (std::abs(s.value() - 1.0) > 1e-9) throw std::invalid_argument("logconcavity_check: pmf does not sum to 1");
}

bool logconcave_sequence(std::span<const double> f) {
  for (std::size_t k = 1; k + 1 < f.size(); ++k)
    if (f[k - 1] * f[k + 1] > f[k] * f[k] + 1e-12) return false;
  return true;
}

}  // namespace

bool logconcavity_check(std::span<const double> pmf) {
  check_pmf(pmf);
  return logconcave_sequence(pmf);
}

bool logconcavity_check_cumulative(std::span<const double> pmf) {
  check_pmf(pmf);
  std::vector<double> cdf(pmf.size());
  KahanSum s;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    s.add(pmf[i]);
    cdf[i] = s.value();
  }
  return logconcave_sequence(cdf);
}

// --- reports -----------------------------------------------------------------

const char* bound_id_name(BoundId id) {
  switch (id) {
    case BoundId::bollobas_pmf_lower: return "bollobas_pmf_lower";
    case BoundId::bollobas_pmf_upper: return "bollobas_pmf_upper";
    case BoundId::bernstein_tail: return "bernstein_tail";
    case BoundId::cum_upper: return "cum_upper";
    case BoundId::cum_lower: return "cum_lower";
    case BoundId::twobinom_lower: return "twobinom_lower";
    case BoundId::twobinom_upper: return "twobinom_upper";
    case BoundId::twobinom_diff_upper: return "twobinom_diff_upper";
  }
  return "?";
}

namespace {

void finish_validity(BoundReport& r) {
  r.valid = true;
  for (const auto& [name, ok] : r.validity) r.valid = r.valid && ok;
}

}  // namespace

BoundReport report_bollobas_lower(const BinomialSpec& spec, std::int64_t k) {
  BoundReport r;
  r.id = BoundId::bollobas_pmf_lower;
  const double h = static_cast<double>(k) - spec.p * static_cast<double>(spec.n);
  r.params = {{"n", static_cast<double>(spec.n)}, {"p", spec.p}, {"k", static_cast<double>(k)}, {"h", h}};
  r.bound_value = bollobas_pmf_lower(spec, k);
  r.exact_value = binom_pmf_exact(spec, k);
  r.slack = r.exact_value - r.bound_value;  // lower bound: exact - bound
  r.validity = {{"pn_ge_1", spec.p * static_cast<double>(spec.n) >= 1.0},
                {"h_positive", h > 0.0},
                {"k_lt_n", k < spec.n}};
  r.asymptotic = false;
  finish_validity(r);
  return r;
}

BoundReport report_bollobas_upper(const BinomialSpec& spec, std::int64_t k, double h) {
  BoundReport r;
  r.id = BoundId::bollobas_pmf_upper;
  r.params = {{"n", static_cast<double>(spec.n)}, {"p", spec.p}, {"k", static_cast<double>(k)}, {"h", h}};
  r.bound_value = bollobas_pmf_upper(spec, k, h);
  r.exact_value = binom_pmf_exact(spec, k);
  r.slack = r.bound_value - r.exact_value;
  r.validity = {{"pn_ge_1", spec.p * static_cast<double>(spec.n) >= 1.0},
                {"k_ge_pn_plus_h", static_cast<double>(k) >= spec.p * static_cast<double>(spec.n) + h - 1e-9},
                {"h1pn_ge_3", h * (1.0 - spec.p) * static_cast<double>(spec.n) >= 3.0}};
  r.asymptotic = false;
  finish_validity(r);
  return r;
}

BoundReport report_bernstein_binomial(const BinomialSpec& spec, double t) {
  BoundReport r;
  r.id = BoundId::bernstein_tail;
  const double n = static_cast<double>(spec.n);
  const double sum_var = n * spec.p * (1.0 - spec.p);
  const double m_bound = std::max(spec.p, 1.0 - spec.p);
  r.params = {{"n", n}, {"p", spec.p}, {"sum_var", sum_var}, {"M", m_bound}, {"t", t}};
  r.bound_value = bernstein_tail(sum_var, m_bound, t);
  // Sum of centered Bernoullis exceeds t  <=>  B(n,p) >= floor(np + t) + 1.
  const std::int64_t kmin = static_cast<std::int64_t>(std::floor(n * spec.p + t)) + 1;
  r.exact_value = kmin > spec.n ? 0.0 : binom_tail_exact(spec, std::max<std::int64_t>(kmin, 0), TailDirection::at_least);
  r.slack = r.bound_value - r.exact_value;
  r.validity = {{"t_positive", t > 0.0}};
  r.asymptotic = false;
  finish_validity(r);
  return r;
}

BoundReport report_asymptotic(AsymptoticKind kind, const AsymptoticParams& params) {
  BoundReport r;
  r.asymptotic = true;
  r.bound_value = asymptotic_bound_eval(kind, params);

  switch (kind) {
    case AsymptoticKind::cum_upper:
    case AsymptoticKind::cum_lower: {
      const BinomialSpec& spec = params.binom;
      const double n = static_cast<double>(spec.n);
      const double h = params.h;
      const double v = spec.p * (1.0 - spec.p) * n;
      r.id = kind == AsymptoticKind::cum_upper ? BoundId::cum_upper : BoundId::cum_lower;
      r.params = {{"n", n}, {"p", spec.p}, {"h", h}};
      const std::int64_t kmin = static_cast<std::int64_t>(std::ceil(spec.p * n + h - 1e-9));
      r.exact_value = kmin > spec.n ? 0.0 : binom_tail_exact(spec, std::max<std::int64_t>(kmin, 0), TailDirection::at_least);
      r.slack = kind == AsymptoticKind::cum_upper ? r.bound_value - r.exact_value
                                                  : r.exact_value - r.bound_value;
      r.validity = {{"h_positive", h > 0.0}};
      if (kind == AsymptoticKind::cum_lower)
        r.validity.emplace_back("h_gt_sigma", h > std::sqrt(v));
      r.validity.emplace_back("h_below_23_power", h < std::pow(v, 2.0 / 3.0));
      break;
    }
    case AsymptoticKind::twobinom_lower:
    case AsymptoticKind::twobinom_upper: {
      const double cn = params.two.capital_n;
      const double s = params.two.s;
      const double p = params.two.p;
      const double h = params.h;
      r.id = kind == AsymptoticKind::twobinom_lower ? BoundId::twobinom_lower : BoundId::twobinom_upper;
      r.params = {{"N", cn}, {"S", s}, {"p", p}, {"h", h}};
      // X1 = B(N-S, p), X2 = B(N+S, 1-p); X1 + X2 >= mu1 + mu2 + h reduces to
      // X1 >= X2' + ceil((n1 - n2)p + h) with X2' = n2 - X2 ~ B(n2, p).
      const std::int64_t n1 = std::llround(cn - s);
      const std::int64_t n2 = std::llround(cn + s);
      if (n1 < 0 || n2 < 0) throw std::invalid_argument("report_asymptotic: negative trial count after rounding");
      const double shift = static_cast<double>(n1 - n2) * p + h;
      const std::int64_t k = static_cast<std::int64_t>(std::ceil(shift - 1e-9));
      r.exact_value = two_binom_compare_exact({n1, p}, {n2, p}, k, CompareMode::at_least);
      r.slack = kind == AsymptoticKind::twobinom_upper ? r.bound_value - r.exact_value
                                                       : r.exact_value - r.bound_value;
      r.validity = {{"h_gt_2sqrt2pqN", h > 2.0 * std::sqrt(2.0 * p * (1.0 - p) * cn)},
                    {"hS_small", h * s < cn * std::sqrt(p * (1.0 - p) * cn)}};
      break;
    }
    case AsymptoticKind::twobinom_diff_upper: {
      const double cn = params.two.capital_n;
      const double s = params.two.s;
      const double t = params.two.t_shift;
      const double p = params.two.p;
      r.id = BoundId::twobinom_diff_upper;
      r.params = {{"N", cn}, {"S", s}, {"T", t}, {"p", p}};
      const std::int64_t n1 = std::llround(cn - s);
      const std::int64_t n2 = std::llround(cn + s - t);
      if (n1 < 0 || n2 < 0) throw std::invalid_argument("report_asymptotic: negative trial count after rounding");
      const std::int64_t k = std::llround(p * t);
      r.exact_value = two_binom_compare_exact({n1, p}, {n2, p}, k, CompareMode::equal);
      r.slack = r.bound_value - r.exact_value;
      r.validity = {{"pS_gt_sigma", p * s > std::sqrt(p * (1.0 - p) * cn)},
                    {"pS_below_23_power", p * s < std::pow(p * (1.0 - p) * cn, 2.0 / 3.0)},
                    {"T_lt_N", t < cn},
                    {"pT_integral", std::abs(p * t - std::llround(p * t)) <= 1e-9}};
      break;
    }
  }
  finish_validity(r);
  return r;
}

// --- canned sweeps -----------------------------------------------------------

namespace {

const std::int64_t kSweepN[] = {100, 200, 400, 700, 1000, 2000, 4000, 7000, 10000};
const double kSweepP[] = {0.1, 0.3, 0.5, 0.7, 0.9};

template <typename Fn>
void for_bollobas_grid(Fn&& fn) {
  for (std::int64_t n : kSweepN) {
    for (double p : kSweepP) {
      const double sigma = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
      const std::int64_t k_lo = static_cast<std::int64_t>(std::floor(p * static_cast<double>(n))) + 1;
      const std::int64_t k_hi = std::min<std::int64_t>(
          n - 1, static_cast<std::int64_t>(std::floor(p * static_cast<double>(n) + 3.0 * sigma)));
      for (std::int64_t k = k_lo; k <= k_hi; ++k) fn(BinomialSpec{n, p}, k);
    }
  }
}

}  // namespace

std::vector<BoundReport> sweep_bound(BoundId id) {
  std::vector<BoundReport> out;
  switch (id) {
    case BoundId::bollobas_pmf_lower:
      for_bollobas_grid([&](const BinomialSpec& spec, std::int64_t k) {
        const double h = static_cast<double>(k) - spec.p * static_cast<double>(spec.n);
        if (h > 0.0) out.push_back(report_bollobas_lower(spec, k));
      });
      break;
    case BoundId::bollobas_pmf_upper:
      for_bollobas_grid([&](const BinomialSpec& spec, std::int64_t k) {
        const double h = static_cast<double>(k) - spec.p * static_cast<double>(spec.n);
        if (h > 0.0 && h * (1.0 - spec.p) * static_cast<double>(spec.n) >= 3.0)
          out.push_back(report_bollobas_upper(spec, k, h));
      });
      break;
    case BoundId::bernstein_tail:
      for (std::int64_t n : {30LL, 100LL, 300LL, 1000LL, 3000LL, 10000LL}) {
        for (int pi = 1; pi <= 19; ++pi) {
          const double p = 0.05 * pi;
          const double sigma = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
          for (int j = 1; j <= 50; ++j)
            out.push_back(report_bernstein_binomial({n, p}, 3.0 * sigma * j / 50.0));
        }
      }
      break;
    case BoundId::cum_upper:
    case BoundId::cum_lower:
      for (std::int64_t n : {1000LL, 10000LL}) {
        for (double p : {0.1, 0.5}) {
          const double sigma = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
          for (double mult : {1.2, 1.5, 2.0, 2.5, 3.0}) {
            AsymptoticParams ap;
            ap.binom = {n, p};
            ap.h = mult * sigma;
            out.push_back(report_asymptotic(
                id == BoundId::cum_upper ? AsymptoticKind::cum_upper : AsymptoticKind::cum_lower, ap));
          }
        }
      }
      break;
    case BoundId::twobinom_lower:
    case BoundId::twobinom_upper:
      for (double cn : {500.0, 2000.0, 5000.0}) {
        for (double p : {0.1, 0.5}) {
          for (double s : {0.0, cn / 50.0}) {
            const double base = 2.0 * std::sqrt(2.0 * p * (1.0 - p) * cn);
            for (double mult : {1.0, 1.25, 1.5}) {
              AsymptoticParams ap;
              ap.two = {cn, s, 0.0, p};
              ap.h = mult * base;
              out.push_back(report_asymptotic(
                  id == BoundId::twobinom_lower ? AsymptoticKind::twobinom_lower : AsymptoticKind::twobinom_upper,
                  ap));
            }
          }
        }
      }
      break;
    case BoundId::twobinom_diff_upper:
      for (double cn : {2000.0, 5000.0}) {
        for (double p : {0.1, 0.3}) {
          for (double mult : {2.0, 3.0, 4.0}) {
            const double s = mult * std::sqrt(p * (1.0 - p) * cn) / p;
            for (double pt : {0.0, 10.0}) {
              AsymptoticParams ap;
              ap.two = {cn, s, pt / p, p};
              out.push_back(report_asymptotic(AsymptoticKind::twobinom_diff_upper, ap));
            }
          }
        }
      }
      break;
  }
  return out;
}

// --- CSV ----------------------------------------------------------------------

namespace {

void write_g17(std::ostream& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

}  // namespace

void write_bound_reports_csv(std::ostream& out, std::span<const BoundReport> reports) {
  out << "bound_id,params,bound_value,exact_value,slack,validity,asymptotic\n";
  for (const BoundReport& r : reports) {
    out << bound_id_name(r.id) << ',';
    for (std::size_t i = 0; i < r.params.size(); ++i) {
      if (i) out << ';';
      out << r.params[i].first << '=';
      write_g17(out, r.params[i].second);
    }
    out << ',';
    write_g17(out, r.bound_value);
    out << ',';
    write_g17(out, r.exact_value);
    out << ',';
    write_g17(out, r.slack);
    out << ',';
    for (std::size_t i = 0; i < r.validity.size(); ++i) {
      if (i) out << ';';
      out << r.validity[i].first << '=' << (r.validity[i].second ? 1 : 0);
    }
    out << ',' << (r.asymptotic ? 1 : 0) << '\n';
  }
}

// --- edge-count audits ---------------------------------------------------------

const char* edge_prop_name(EdgeProp prop) {
  switch (prop) {
    case EdgeProp::within_upper: return "within_upper";
    case EdgeProp::boundary_lower: return "boundary_lower";
    case EdgeProp::within_at_most_2t: return "within_at_most_2t";
    case EdgeProp::boundary_twice_within: return "boundary_twice_within";
    case EdgeProp::boundary_twice_within_sparse: return "boundary_twice_within_sparse";
  }
  return "?";
}

EdgeAuditReport audit_edge_bounds(const Graph& g, std::int64_t set_size,
                                  std::int64_t samples, std::uint64_t seed) {
  const int n = g.vertex_count();
  const double p = g.gen_p();
  if (p < 0.0) throw std::invalid_argument("audit_edge_bounds: graph does not carry its generating p");
  if (set_size < 0 || set_size > n) throw std::invalid_argument("audit_edge_bounds: set_size out of range");
  if (samples < 1) throw std::invalid_argument("audit_edge_bounds: samples must be >= 1");

  const double t = static_cast<double>(set_size);
  const double nd = static_cast<double>(n);
  const double logn = std::log(nd);

  EdgeAuditReport rep;
  rep.n = n;
  rep.p = p;
  rep.set_size = set_size;
  rep.samples = samples;

  EdgeAuditRow rows[5] = {
      {EdgeProp::within_upper, t > nd / 5.0, 0, 0},
      {EdgeProp::boundary_lower, t > nd / 5.0 && t <= nd / 2.0, 0, 0},
      {EdgeProp::within_at_most_2t,
       p * nd > logn && p * nd <= 5.0 * logn && t <= std::pow(nd, 29.0 / 30.0), 0, 0},
      {EdgeProp::boundary_twice_within, p * (1.0 - p) * nd >= 4.0 * logn && t <= nd / 5.0, 0, 0},
      {EdgeProp::boundary_twice_within_sparse,
       p * nd >= logn && t >= std::pow(nd, 24.0 / 25.0) && t <= nd / 5.0, 0, 0},
  };

  const double within_cap = p * t * (t - 1.0) / 2.0 + 2.0 * t * std::sqrt(p * (1.0 - p) * t);
  const double boundary_floor = p * t * (nd - t) - 3.0 * t * std::sqrt(p * (1.0 - p) * (nd - t));

  SplitMix64 rng(seed);
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) idx[static_cast<std::size_t>(v)] = v;
  std::vector<std::int64_t> swapped(static_cast<std::size_t>(set_size));

  for (std::int64_t s = 0; s < samples; ++s) {
    for (std::int64_t i = 0; i < set_size; ++i) {
      const std::int64_t j = i + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n - i)));
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
      swapped[static_cast<std::size_t>(i)] = j;
    }
    VertexSet vs = VertexSet::from_elements(
        n, std::vector<int>(idx.begin(), idx.begin() + set_size));
    const SetEdgeCounts counts = set_edge_counts(g, vs);

    for (EdgeAuditRow& row : rows) {
      if (!row.applicable) continue;
      ++row.checked;
      bool ok = true;
      switch (row.prop) {
        case EdgeProp::within_upper: ok = static_cast<double>(counts.within) <= within_cap; break;
        case EdgeProp::boundary_lower: ok = static_cast<double>(counts.boundary) >= boundary_floor; break;
        case EdgeProp::within_at_most_2t: ok = counts.within <= 2 * set_size; break;
        case EdgeProp::boundary_twice_within:
        case EdgeProp::boundary_twice_within_sparse: ok = counts.boundary >= 2 * counts.within; break;
      }
      if (!ok) ++row.violations;
    }

    for (std::int64_t i = set_size - 1; i >= 0; --i)
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(swapped[static_cast<std::size_t>(i)])]);
  }

  rep.rows.assign(rows, rows + 5);
  rep.min_degree_regime = p * nd > logn;
  rep.min_degree = min_degree(g);
  rep.min_degree_gt8 = rep.min_degree > 8;
  return rep;
}

void write_edge_audit_csv(std::ostream& out, const EdgeAuditReport& report) {
  out << "prop,n,p,set_size,samples,applicable,checked,violations\n";
  for (const EdgeAuditRow& row : report.rows) {
    out << edge_prop_name(row.prop) << ',' << report.n << ',';
    write_g17(out, report.p);
    out << ',' << report.set_size << ',' << report.samples << ',' << (row.applicable ? 1 : 0) << ','
        << row.checked << ',' << row.violations << '\n';
  }
  out << "min_degree_gt8," << report.n << ',';
  write_g17(out, report.p);
  out << ',' << report.set_size << ",1," << (report.min_degree_regime ? 1 : 0) << ",1,"
      << (report.min_degree_gt8 ? 0 : 1) << '\n';
}

}  // namespace majoperc
