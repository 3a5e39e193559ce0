#include "catmode/observables.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "catmode/errors.hpp"
#include "catmode/phase.hpp"

namespace catmode {

namespace {

constexpr double kMinMeanPhoton = 1e-12;

double log_pow(double r, int n) {
  if (n == 0) return 0.0;
  if (r == 0.0) return -std::numeric_limits<double>::infinity();
  return n * std::log(r);
}

double parity_sign(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

// sum over (p1, p2) of e^{-S} |a1|^{2p1} |a2|^{2p2} (p1+m1)! (p2+m2)! / (p1! p2!)^2
//   * (1 + (-1)^{p1+p2} cos phi) * weight(p_mode + m_mode)
template <typename Weight>
double weighted_cat_series(const CatParams& p, Mode mode, Weight weight, const SeriesConfig& cfg) {
  const double r1 = std::abs(p.alpha1);
  const double r2 = std::abs(p.alpha2);
  const double cos_phi = unit_phase(p.phi).real();
  return sum_double_series(
      [&](int p1, int p2) {
        const double interference = 1.0 + cos_phi * parity_sign(p1 + p2);
        if (interference == 0.0) return 0.0;
        const double log_w = -r1 * r1 - r2 * r2 + log_pow(r1, 2 * p1) + log_pow(r2, 2 * p2) +
                             log_factorial(p1 + p.m1) + log_factorial(p2 + p.m2) -
                             2.0 * (log_factorial(p1) + log_factorial(p2));
        const int n = mode == Mode::one ? p1 + p.m1 : p2 + p.m2;
        return std::exp(log_w) * interference * weight(n);
      },
      cfg, series_peak_hint(r1), series_peak_hint(r2));
}

double cat_moment(const CatParams& p, Mode mode, int order, const SeriesConfig& cfg) {
  const double n3 = cat_norm_N3(p, cfg);
  const double series = weighted_cat_series(
      p, mode,
      [order](int n) {
        return order == 1 ? static_cast<double>(n) : static_cast<double>(n) * (n - 1.0);
      },
      cfg);
  return 2.0 * n3 * n3 * series;
}

MandelReport make_report(double mean_n, double second) {
  if (!(mean_n > kMinMeanPhoton)) {
    throw UndefinedMandel("mandel_q: mean photon number " + std::to_string(mean_n) +
                          " is too small for Q to be defined");
  }
  return {mean_n, second, (second - mean_n * mean_n) / mean_n};
}

double pnd_given_norm(const CatParams& p, double n3, int q1, int q2) {
  if (q1 < p.m1 || q2 < p.m2) return 0.0;
  const int p1 = q1 - p.m1;
  const int p2 = q2 - p.m2;
  // |1 + e^{i phi} (-1)^k|^2 = 2 (1 + cos(phi) (-1)^k)
  const double interference = 2.0 * (1.0 + unit_phase(p.phi).real() * parity_sign(p1 + p2));
  if (interference == 0.0) return 0.0;
  const double r1 = std::abs(p.alpha1);
  const double r2 = std::abs(p.alpha2);
  const double log_amp = std::log(n3) - 0.5 * (r1 * r1 + r2 * r2) + log_pow(r1, p1) +
                         log_pow(r2, p2) + 0.5 * (log_factorial(q1) + log_factorial(q2)) -
                         log_factorial(p1) - log_factorial(p2);
  return std::exp(2.0 * log_amp) * interference;
}

}  // namespace

double pnd(const CatParams& p, int q1, int q2, const SeriesConfig& cfg) {
  return pnd_given_norm(p, cat_norm_N3(p, cfg), q1, q2);
}

PndGrid pnd_grid(const CatParams& p, int q1_max, int q2_max, const SeriesConfig& cfg) {
  if (q1_max < 0 || q2_max < 0) throw std::invalid_argument("pnd_grid: negative extent");
  const double n3 = cat_norm_N3(p, cfg);
  PndGrid grid{q1_max, q2_max, {}, 0.0};
  grid.prob.reserve(static_cast<std::size_t>(q1_max + 1) * static_cast<std::size_t>(q2_max + 1));
  CompensatedSum total;
  for (int q1 = 0; q1 <= q1_max; ++q1) {
    for (int q2 = 0; q2 <= q2_max; ++q2) {
      const double v = pnd_given_norm(p, n3, q1, q2);
      grid.prob.push_back(v);
      total.add(v);
    }
  }
  grid.total = total.value();
  return grid;
}

PndGrid pnd_from_state(const TwoModeState& s) {
  const FockCutoff& c = s.cutoff();
  PndGrid grid{c.n1_max, c.n2_max, {}, 0.0};
  grid.prob.reserve(c.dimension());
  CompensatedSum total;
  for (const cplx& a : s.amplitudes()) {
    grid.prob.push_back(std::norm(a));
    total.add(std::norm(a));
  }
  grid.total = total.value();
  return grid;
}

double mean_photon(const CatParams& p, Mode mode, const SeriesConfig& cfg) {
  return cat_moment(p, mode, 1, cfg);
}

double second_moment(const CatParams& p, Mode mode, const SeriesConfig& cfg) {
  return cat_moment(p, mode, 2, cfg);
}

MandelReport mandel_q(const CatParams& p, Mode mode, const SeriesConfig& cfg) {
  return make_report(mean_photon(p, mode, cfg), second_moment(p, mode, cfg));
}

MandelReport mandel_from_state(const TwoModeState& s, Mode mode) {
  const PhotonMoments m = photon_moments(s, mode);
  return make_report(m.mean_n, m.second_moment);
}

double nonlinear_f(int n, int m) { return 1.0 - static_cast<double>(m) / (1.0 + n); }

double eigen_residual(const TwoModeState& s, const CatParams& p, cplx eigenvalue) {
  if (s.tail_mass() > kTailMassLimit) {
    throw TruncationOverflow("eigen_residual: state tail mass " + std::to_string(s.tail_mass()) +
                             " exceeds the truncation limit");
  }
  TwoModeState v = apply_annihilation(apply_annihilation(s, Mode::two), Mode::one);
  v = apply_number_fn(v, Mode::two, [m = p.m2](int n) { return nonlinear_f(n, m); });
  v = apply_number_fn(v, Mode::one, [m = p.m1](int n) { return nonlinear_f(n, m); });
  return distance(v, eigenvalue * s);
}

double eigen_residual(const TwoModeState& s, const CatParams& p) {
  return eigen_residual(s, p, p.alpha1 * p.alpha2);
}

double parity_eigen_residual(const TwoModeState& s, const CatParams& p) {
  if (s.tail_mass() > kTailMassLimit) {
    throw TruncationOverflow("parity_eigen_residual: state tail mass " +
                             std::to_string(s.tail_mass()) + " exceeds the truncation limit");
  }
  // A1 A2 = P a1 P a2
  TwoModeState v = apply_parity(apply_annihilation(s, Mode::two));
  v = apply_parity(apply_annihilation(v, Mode::one));
  v = apply_number_fn(v, Mode::two, [m = p.m2](int n) { return nonlinear_f(n, m); });
  v = apply_number_fn(v, Mode::one, [m = p.m1](int n) { return nonlinear_f(n, m); });
  return distance(v, (p.alpha1 * p.alpha2) * s);
}

}  // namespace catmode
