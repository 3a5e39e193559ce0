#include "catmode/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "catmode/errors.hpp"
#include "catmode/phase.hpp"

namespace catmode {

namespace {

// n * ln(r) with the convention 0^0 = 1.
double log_pow(double r, int n) {
  if (n == 0) return 0.0;
  if (r == 0.0) return -std::numeric_limits<double>::infinity();
  return n * std::log(r);
}

double parity_sign(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

// e^{-x} (p + m)! x^p / (p!)^2 in log form, x = |alpha|^2.
double log_pacs_weight(double abs_alpha, int m, int p) {
  return -abs_alpha * abs_alpha + log_factorial(p + m) - 2.0 * log_factorial(p) +
         log_pow(abs_alpha, 2 * p);
}

void check_tail(double tail, const char* where) {
  if (tail > kTailMassLimit) {
    throw TruncationOverflow(std::string(where) + ": tail mass " + std::to_string(tail) +
                             " exceeds the truncation limit; raise the cutoff");
  }
}

}  // namespace

bool CatParams::is_degenerate() const {
  return std::abs(alpha1) == 0.0 && std::abs(alpha2) == 0.0 && unit_phase(phi).real() == -1.0;
}

void CatParams::validate() const {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("CatParams: photon counts must be >= 0");
  if (!std::isfinite(phi) || phi < 0.0 || phi >= 2.0 * std::numbers::pi) {
    throw std::invalid_argument("CatParams: phi must lie in [0, 2 pi)");
  }
  if (!std::isfinite(std::abs(alpha1)) || !std::isfinite(std::abs(alpha2))) {
    throw std::invalid_argument("CatParams: coherent amplitudes must be finite");
  }
}

PacsSums pacs_sums(cplx alpha, int m, const SeriesConfig& cfg) {
  if (m < 0) throw std::invalid_argument("pacs_sums: m must be >= 0");
  const double r = std::abs(alpha);
  auto parity_part = [&](int parity) {
    return sum_series(
        [&](int p) { return p % 2 == parity ? std::exp(log_pacs_weight(r, m, p)) : 0.0; }, cfg,
        series_peak_hint(r));
  };
  return {parity_part(0), parity_part(1)};
}

double pacs_norm_k(cplx alpha, int m, const SeriesConfig& cfg) {
  return 1.0 / std::sqrt(pacs_sums(alpha, m, cfg).total());
}

double cat_norm_N3(const CatParams& p, const SeriesConfig& cfg) {
  p.validate();
  const double r1 = std::abs(p.alpha1);
  const double r2 = std::abs(p.alpha2);
  const double cos_phi = unit_phase(p.phi).real();
  const double bracket = sum_double_series(
      [&](int n1, int n2) {
        const double interference = 1.0 + cos_phi * parity_sign(n1 + n2);
        if (interference == 0.0) return 0.0;
        return std::exp(log_pacs_weight(r1, p.m1, n1) + log_pacs_weight(r2, p.m2, n2)) *
               interference;
      },
      cfg, series_peak_hint(r1), series_peak_hint(r2));
  if (bracket < kDegenerateNormThreshold) {
    throw DegenerateState("cat_norm_N3: superposition has zero norm at this parameter point");
  }
  return 1.0 / std::sqrt(2.0 * bracket);
}

CatNormalization cat_normalization(const CatParams& p, const SeriesConfig& cfg) {
  return {cat_norm_N3(p, cfg), pacs_norm_k(p.alpha1, p.m1, cfg),
          pacs_norm_k(p.alpha2, p.m2, cfg)};
}

FockCutoff default_cutoff(const CatParams& p) {
  return {default_mode_cutoff(std::abs(p.alpha1), p.m1),
          default_mode_cutoff(std::abs(p.alpha2), p.m2)};
}

ModeVector build_pacs(cplx alpha, int m, int n_max, const SeriesConfig& cfg) {
  if (m < 0) throw std::invalid_argument("build_pacs: m must be >= 0");
  if (n_max <= m) {
    throw TruncationOverflow("build_pacs: cutoff " + std::to_string(n_max) +
                             " leaves no headroom above m = " + std::to_string(m));
  }
  const double k = pacs_norm_k(alpha, m, cfg);
  const double r = std::abs(alpha);
  const double arg = std::arg(alpha);
  ModeVector v(static_cast<std::size_t>(n_max) + 1, cplx{});
  for (int p = 0; m + p <= n_max; ++p) {
    const double log_mag = -0.5 * r * r + log_pow(r, p) + 0.5 * log_factorial(p + m) -
                           log_factorial(p);
    v[m + p] = k * std::exp(log_mag) * unit_phase(p * arg);
  }
  check_tail(std::norm(v[n_max]) + std::norm(v[n_max - 1]), "build_pacs");
  return v;
}

TwoModeState build_pa2cat(const CatParams& p, FockCutoff cutoff, const SeriesConfig& cfg) {
  cutoff.validate();
  const double n3 = cat_norm_N3(p, cfg);
  const double r1 = std::abs(p.alpha1);
  const double r2 = std::abs(p.alpha2);
  const double arg1 = std::arg(p.alpha1);
  const double arg2 = std::arg(p.alpha2);
  const cplx rel = unit_phase(p.phi);
  const double log_prefactor = std::log(n3) - 0.5 * (r1 * r1 + r2 * r2);

  std::vector<cplx> amp(cutoff.dimension(), cplx{});
  const std::size_t stride = static_cast<std::size_t>(cutoff.n2_max) + 1;
  for (int p1 = 0; p1 + p.m1 <= cutoff.n1_max; ++p1) {
    const double lw1 = log_pow(r1, p1) + 0.5 * log_factorial(p1 + p.m1) - log_factorial(p1);
    for (int p2 = 0; p2 + p.m2 <= cutoff.n2_max; ++p2) {
      const cplx interference = 1.0 + rel * parity_sign(p1 + p2);
      if (interference == cplx{}) continue;
      const double lw2 = log_pow(r2, p2) + 0.5 * log_factorial(p2 + p.m2) - log_factorial(p2);
      const double mag = std::exp(log_prefactor + lw1 + lw2);
      amp[static_cast<std::size_t>(p1 + p.m1) * stride + static_cast<std::size_t>(p2 + p.m2)] =
          mag * unit_phase(p1 * arg1 + p2 * arg2) * interference;
    }
  }
  TwoModeState out(cutoff, std::move(amp));
  check_tail(out.tail_mass(), "build_pa2cat");
  return out;
}

TwoModeState build_parity_transformed(const CatParams& p, FockCutoff cutoff,
                                      const SeriesConfig& cfg) {
  p.validate();
  if (std::abs(1.0 - unit_phase(p.phi)) < kDegenerateNormThreshold) {
    throw DegenerateState("build_parity_transformed: factor (1 - e^{i phi}) vanishes at phi = 0");
  }
  const double s = parity_sign(p.m1 + p.m2);
  const cplx shift{0.0, s};
  const cplx beta1 = shift * p.alpha1;
  const cplx beta2 = shift * p.alpha2;
  const cplx w_minus = cplx{1.0, -1.0} / std::numbers::sqrt2;  // e^{-i pi/4}
  const cplx w_plus = cplx{1.0, 1.0} / std::numbers::sqrt2;    // e^{+i pi/4}

  TwoModeState first = TwoModeState::product(build_pacs(beta1, p.m1, cutoff.n1_max, cfg),
                                             build_pacs(beta2, p.m2, cutoff.n2_max, cfg));
  TwoModeState second = TwoModeState::product(build_pacs(-beta1, p.m1, cutoff.n1_max, cfg),
                                              build_pacs(-beta2, p.m2, cutoff.n2_max, cfg));
  TwoModeState out = w_minus * std::move(first) + w_plus * std::move(second);
  if (out.norm_squared() < kDegenerateNormThreshold) {
    throw DegenerateState("build_parity_transformed: branches cancel");
  }
  out.normalize();
  check_tail(out.tail_mass(), "build_parity_transformed");
  return out;
}

}  // namespace catmode
