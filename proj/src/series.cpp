#include "catmode/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "catmode/errors.hpp"

namespace catmode {

namespace {

constexpr int kLogFactorialTableSize = 4096;

// The tail test may not stop before this many terms per axis. Moment weights
// such as n (n - 1) combined with parity zeros make the leading block vanish
// identically, which would otherwise look like a converged tail.
constexpr int kMinTermsPerAxis = 8;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogFactorialTableSize);
    CompensatedSum acc;
    t[0] = 0.0;
    for (int k = 1; k < kLogFactorialTableSize; ++k) {
      acc.add(std::log(static_cast<double>(k)));
      t[k] = acc.value();
    }
    return t;
  }();
  return table;
}

double tolerance(const SeriesConfig& cfg, double partial) {
  return cfg.rel_tol * std::abs(partial) + cfg.abs_tol;
}

}  // namespace

void SeriesConfig::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("SeriesConfig: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("SeriesConfig: abs_tol must be >= 0");
  if (max_terms_per_axis < 1) {
    throw std::invalid_argument("SeriesConfig: max_terms_per_axis must be >= 1");
  }
}

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  if (n < kLogFactorialTableSize) return log_factorial_table()[n];
  // lgamma_r avoids the global signgam write of plain lgamma.
  int sign = 0;
  return ::lgamma_r(static_cast<double>(n) + 1.0, &sign);
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

int series_peak_hint(double r) {
  const double peak = std::ceil(r * r);
  if (!(peak < 1e9)) return std::numeric_limits<int>::max();
  return static_cast<int>(peak) + kMinTermsPerAxis;
}

namespace {

int first_stop(int min_terms, int max_terms, const char* who) {
  if (min_terms > max_terms) {
    throw NonConvergence(std::string(who) + ": series peaks beyond " +
                         std::to_string(max_terms) + " terms");
  }
  return std::max(std::min(kMinTermsPerAxis, max_terms), min_terms);
}

}  // namespace

double sum_series(const std::function<double(int)>& term, const SeriesConfig& cfg,
                  int min_terms) {
  cfg.validate();
  const int stop = first_stop(min_terms, cfg.max_terms_per_axis, "sum_series");
  CompensatedSum acc;
  double prev_abs = 0.0;
  for (int n = 0; n < cfg.max_terms_per_axis; ++n) {
    const double t = term(n);
    acc.add(t);
    const double last_two = prev_abs + std::abs(t);
    prev_abs = std::abs(t);
    if (n + 1 >= stop && last_two <= tolerance(cfg, acc.value())) return acc.value();
  }
  throw NonConvergence("sum_series: tail still above tolerance after " +
                       std::to_string(cfg.max_terms_per_axis) + " terms");
}

double sum_double_series(const std::function<double(int, int)>& term,
                         const SeriesConfig& cfg, int min_terms1, int min_terms2) {
  cfg.validate();
  const int max_terms = cfg.max_terms_per_axis;
  const int stop1 = first_stop(min_terms1, max_terms, "sum_double_series");
  const int stop2 = first_stop(min_terms2, max_terms, "sum_double_series");
  std::vector<double> row_abs(max_terms, 0.0);
  std::vector<double> col_abs(max_terms, 0.0);
  CompensatedSum acc;

  auto add_term = [&](int n1, int n2) {
    const double t = term(n1, n2);
    acc.add(t);
    row_abs[n1] += std::abs(t);
    col_abs[n2] += std::abs(t);
  };

  int last1 = stop1 - 1;
  int last2 = stop2 - 1;
  for (int n1 = 0; n1 <= last1; ++n1)
    for (int n2 = 0; n2 <= last2; ++n2) add_term(n1, n2);

  auto edge_mass = [](const std::vector<double>& v, int last) {
    return v[last] + (last > 0 ? v[last - 1] : 0.0);
  };

  for (;;) {
    const double tol = tolerance(cfg, acc.value());
    const bool grow1 = edge_mass(row_abs, last1) > tol;
    const bool grow2 = edge_mass(col_abs, last2) > tol;
    if (!grow1 && !grow2) break;
    if ((grow1 && last1 + 1 >= max_terms) || (grow2 && last2 + 1 >= max_terms)) {
      throw NonConvergence("sum_double_series: tail still above tolerance after " +
                           std::to_string(max_terms) + " terms per axis");
    }
    if (grow1) {
      ++last1;
      for (int n2 = 0; n2 <= last2; ++n2) add_term(last1, n2);
    }
    if (grow2) {
      ++last2;
      for (int n1 = 0; n1 <= last1; ++n1) add_term(n1, last2);
    }
  }
  return acc.value();
}

double laguerre(int m, double x) {
  if (m < 0) throw std::invalid_argument("laguerre: negative degree");
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace catmode
