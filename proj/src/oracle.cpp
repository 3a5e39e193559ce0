#include "catmode/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <json.hpp>

#include "catmode/entanglement.hpp"
#include "catmode/errors.hpp"
#include "catmode/observables.hpp"
#include "catmode/phase.hpp"

namespace catmode {

ModeVector coherent_vector(cplx alpha, int n_max) {
  const double r = std::abs(alpha);
  const double arg = std::arg(alpha);
  ModeVector v(static_cast<std::size_t>(n_max) + 1, cplx{});
  for (int n = 0; n <= n_max; ++n) {
    if (r == 0.0) {
      v[n] = n == 0 ? 1.0 : 0.0;
      continue;
    }
    int sign = 0;
    const double log_mag = -0.5 * r * r + n * std::log(r) - 0.5 * ::lgamma_r(n + 1.0, &sign);
    v[n] = std::polar(std::exp(log_mag), n * arg);
  }
  return v;
}

namespace {

TwoModeState photon_added_branch(cplx a1, cplx a2, int m1, int m2, FockCutoff cutoff) {
  TwoModeState s = TwoModeState::product(coherent_vector(a1, cutoff.n1_max),
                                         coherent_vector(a2, cutoff.n2_max));
  for (int i = 0; i < m1; ++i) s = apply_creation(s, Mode::one);
  for (int i = 0; i < m2; ++i) s = apply_creation(s, Mode::two);
  return s;
}

}  // namespace

TwoModeState oracle_state(const CatParams& p, FockCutoff cutoff) {
  p.validate();
  cutoff.validate();
  TwoModeState plus = photon_added_branch(p.alpha1, p.alpha2, p.m1, p.m2, cutoff);
  TwoModeState minus = photon_added_branch(-p.alpha1, -p.alpha2, p.m1, p.m2, cutoff);
  TwoModeState s = std::move(plus) + unit_phase(p.phi) * std::move(minus);
  if (s.norm_squared() < kDegenerateNormThreshold) {
    throw DegenerateState("oracle_state: superposition has zero norm");
  }
  s.normalize();
  if (s.tail_mass() > kTailMassLimit) {
    throw TruncationOverflow("oracle_state: tail mass exceeds the truncation limit");
  }
  return s;
}

CrosscheckReport crosscheck(const CatParams& p, const SeriesConfig& cfg) {
  CrosscheckReport r;
  r.params = p;
  const FockCutoff cutoff = default_cutoff(p).doubled();
  const TwoModeState oracle = oracle_state(p, cutoff);
  const TwoModeState closed = build_pa2cat(p, cutoff, cfg);
  r.max_amp_diff = max_amplitude_diff(oracle, closed);

  const PndGrid from_oracle = pnd_from_state(oracle);
  const PndGrid from_closed = pnd_grid(p, cutoff.n1_max, cutoff.n2_max, cfg);
  for (std::size_t i = 0; i < from_oracle.prob.size(); ++i) {
    r.pnd_diff = std::max(r.pnd_diff, std::abs(from_oracle.prob[i] - from_closed.prob[i]));
  }

  for (Mode mode : {Mode::one, Mode::two}) {
    const double mean = mean_photon(p, mode, cfg);
    const double second = second_moment(p, mode, cfg);
    const PhotonMoments direct = photon_moments(oracle, mode);
    r.mean_diff = std::max({r.mean_diff, std::abs(mean - direct.mean_n),
                            std::abs(second - direct.second_moment)});
    // Q is undefined at vanishing occupation; the moments above still cover that point.
    try {
      const double q_closed = mandel_q(p, mode, cfg).q;
      const double q_direct = mandel_from_state(oracle, mode).q;
      r.q_diff = std::max(r.q_diff, std::abs(q_closed - q_direct));
    } catch (const UndefinedMandel&) {
    }
  }

  r.c_diff = std::abs(concurrence_closed(p, cfg).c_closed - concurrence_purity(oracle));
  r.residual = eigen_residual(oracle, p);

  r.pass = r.max_amp_diff < kAmplitudeTol && r.pnd_diff < kPndTol && r.mean_diff < kMomentTol &&
           r.q_diff < kMomentTol && r.c_diff < kConcurrenceTol && r.residual < kResidualTol;
  return r;
}

std::string to_json_line(const CrosscheckReport& r) {
  nlohmann::ordered_json params;
  params["alpha1"] = {{"re", r.params.alpha1.real()}, {"im", r.params.alpha1.imag()}};
  params["alpha2"] = {{"re", r.params.alpha2.real()}, {"im", r.params.alpha2.imag()}};
  params["m1"] = r.params.m1;
  params["m2"] = r.params.m2;
  params["phi"] = r.params.phi;

  nlohmann::ordered_json j;
  j["params"] = params;
  j["max_amp_diff"] = r.max_amp_diff;
  j["pnd_diff"] = r.pnd_diff;
  j["mean_diff"] = r.mean_diff;
  j["q_diff"] = r.q_diff;
  j["c_diff"] = r.c_diff;
  j["residual"] = r.residual;
  j["pass"] = r.pass;
  return j.dump();
}

}  // namespace catmode
