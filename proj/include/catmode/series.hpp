#pragma once

#include <functional>

namespace catmode {

// Truncation policy shared by every infinite sum in the library.
struct SeriesConfig {
  double rel_tol = 1e-14;
  double abs_tol = 1e-300;  // underflow guard
  int max_terms_per_axis = 400;

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

// ln(n!). Exact summation of ln k for small n (cached), lgamma above.
double log_factorial(int n);

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

// Both summers evaluate at least max(min(8, max_terms_per_axis), min_terms)
// terms per axis before the tail test may stop, so short runs of structural
// zeros or underflowed terms ahead of the peak cannot pass for convergence. A
// min_terms above max_terms_per_axis throws NonConvergence.
//
// Sum of term(n), n = 0, 1, ... The range is extended while the last two terms
// together contribute more than rel_tol * |S| + abs_tol. Inspecting a pair of
// terms keeps series with parity-forbidden (exactly zero) terms from stopping
// early. Throws NonConvergence at max_terms_per_axis.
double sum_series(const std::function<double(int)>& term, const SeriesConfig& cfg,
                  int min_terms = 0);

// Sum of term(n1, n2) over an adaptively grown rectangle [0..N1] x [0..N2].
// Each axis is extended independently while the absolute mass of its last two
// rows (columns) exceeds rel_tol * |S| + abs_tol.
double sum_double_series(const std::function<double(int, int)>& term,
                         const SeriesConfig& cfg, int min_terms1 = 0, int min_terms2 = 0);

// Terms to take before testing the tail of a series whose n-th term scales as
// r^{2n} / n!, which peaks near n = r^2.
int series_peak_hint(double r);

// Laguerre polynomial L_m(x) by the three-term recurrence.
double laguerre(int m, double x);

}  // namespace catmode
