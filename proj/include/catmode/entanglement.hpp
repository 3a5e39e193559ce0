#pragma once

#include <optional>

#include "catmode/fock.hpp"
#include "catmode/series.hpp"
#include "catmode/states.hpp"

namespace catmode {

// M (lambda |a>|b> + delta |c>|d>) with P1 = <a|c>, P2 = <d|b>.
// The 1 - P_i^2 factors are carried separately because forming them from P_i
// loses every significant digit as P_i -> 1.
struct BipartiteForm {
  double big_m = 0.0;
  cplx lambda{1.0, 0.0};
  cplx delta{1.0, 0.0};
  double p1 = 0.0;
  double p2 = 0.0;
  double one_minus_p1_sq = 0.0;
  double one_minus_p2_sq = 0.0;

  // |M|^2 (|lambda|^2 + |delta|^2 + 2 Re(conj(lambda) delta P1 P2)); 1 when consistent.
  double reconstructed_norm() const;
};

// |2 M^2 lambda delta sqrt(1 - |P1|^2) sqrt(1 - |P2|^2)|, unclamped.
double concurrence(const BipartiteForm& form);

struct ConcurrenceReport {
  CatNormalization norm;
  double p1 = 0.0;
  double p2 = 0.0;
  double c_closed = 0.0;      // clamped to [0, 1]
  double c_closed_raw = 0.0;  // as computed
  std::optional<double> c_oracle;
  std::optional<double> agreement;  // |c_closed - c_oracle|
};

// <alpha, m | -alpha, m> from the alternating series.
double overlap_P(cplx alpha, int m, const SeriesConfig& cfg = {});

// M = N3 / (k1 k2), lambda = 1, delta = e^{i phi}.
BipartiteForm bipartite_form(const CatParams& p, const SeriesConfig& cfg = {});

// Closed-form concurrence; c_oracle left empty.
ConcurrenceReport concurrence_closed(const CatParams& p, const SeriesConfig& cfg = {});

// concurrence_closed plus the purity oracle on the oracle state at
// the given cutoff (doubled default when omitted).
ConcurrenceReport concurrence_report(const CatParams& p, const SeriesConfig& cfg = {},
                                     std::optional<FockCutoff> cutoff = std::nullopt);

// sqrt(max(0, 2 (1 - Tr rho_1^2))). Throws TruncationOverflow when the state's
// tail mass exceeds kTailMassLimit.
double concurrence_purity(const TwoModeState& s);

// C(|a1|, |a2|, m, m, phi) - C(|a1|, |a2|, 0, 0, phi)
double delta_c(const CatParams& base, int m, const SeriesConfig& cfg = {});

}  // namespace catmode
