#include "catmode/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catmode/errors.hpp"
#include "catmode/oracle.hpp"
#include "catmode/phase.hpp"

namespace catmode {

namespace {

struct OverlapParts {
  double p = 1.0;
  double one_minus_p_sq = 0.0;
};

// P = (even - odd) / (even + odd); 1 - P^2 = 4 even odd / (even + odd)^2.
OverlapParts overlap_parts(const PacsSums& s) {
  const double total = s.total();
  return {(s.even - s.odd) / total, 4.0 * s.even * s.odd / (total * total)};
}

}  // namespace

double BipartiteForm::reconstructed_norm() const {
  return big_m * big_m *
         (std::norm(lambda) + std::norm(delta) + 2.0 * (std::conj(lambda) * delta * p1 * p2).real());
}

double concurrence(const BipartiteForm& f) {
  return std::abs(2.0 * f.big_m * f.big_m * f.lambda * f.delta) *
         std::sqrt(std::max(0.0, f.one_minus_p1_sq)) * std::sqrt(std::max(0.0, f.one_minus_p2_sq));
}

double overlap_P(cplx alpha, int m, const SeriesConfig& cfg) {
  return overlap_parts(pacs_sums(alpha, m, cfg)).p;
}

BipartiteForm bipartite_form(const CatParams& p, const SeriesConfig& cfg) {
  const double n3 = cat_norm_N3(p, cfg);
  const PacsSums s1 = pacs_sums(p.alpha1, p.m1, cfg);
  const PacsSums s2 = pacs_sums(p.alpha2, p.m2, cfg);
  const OverlapParts o1 = overlap_parts(s1);
  const OverlapParts o2 = overlap_parts(s2);
  BipartiteForm f;
  // k_i^{-1} = sqrt(sum_i)
  f.big_m = n3 * std::sqrt(s1.total()) * std::sqrt(s2.total());
  f.lambda = 1.0;
  f.delta = unit_phase(p.phi);
  f.p1 = o1.p;
  f.p2 = o2.p;
  f.one_minus_p1_sq = o1.one_minus_p_sq;
  f.one_minus_p2_sq = o2.one_minus_p_sq;
  return f;
}

ConcurrenceReport concurrence_closed(const CatParams& p, const SeriesConfig& cfg) {
  const BipartiteForm f = bipartite_form(p, cfg);
  ConcurrenceReport r;
  r.norm = cat_normalization(p, cfg);
  r.p1 = f.p1;
  r.p2 = f.p2;
  r.c_closed_raw = concurrence(f);
  r.c_closed = std::clamp(r.c_closed_raw, 0.0, 1.0);
  return r;
}

ConcurrenceReport concurrence_report(const CatParams& p, const SeriesConfig& cfg,
                                     std::optional<FockCutoff> cutoff) {
  ConcurrenceReport r = concurrence_closed(p, cfg);
  const TwoModeState s = oracle_state(p, cutoff.value_or(default_cutoff(p).doubled()));
  r.c_oracle = concurrence_purity(s);
  r.agreement = std::abs(r.c_closed - *r.c_oracle);
  return r;
}

double concurrence_purity(const TwoModeState& s) {
  if (s.tail_mass() > kTailMassLimit) {
    throw TruncationOverflow("concurrence_purity: state tail mass " +
                             std::to_string(s.tail_mass()) + " exceeds the truncation limit");
  }
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - reduced_purity(s, Mode::one))));
}

double delta_c(const CatParams& base, int m, const SeriesConfig& cfg) {
  if (m < 0) throw std::invalid_argument("delta_c: m must be >= 0");
  CatParams plain = base;
  plain.alpha1 = std::abs(base.alpha1);
  plain.alpha2 = std::abs(base.alpha2);
  plain.m1 = 0;
  plain.m2 = 0;
  CatParams added = plain;
  added.m1 = m;
  added.m2 = m;
  const double c0 = concurrence_closed(plain, cfg).c_closed;
  if (m == 0) return 0.0;
  return concurrence_closed(added, cfg).c_closed - c0;
}

}  // namespace catmode
