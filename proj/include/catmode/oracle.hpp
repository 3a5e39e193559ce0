#pragma once

#include <string>

#include "catmode/fock.hpp"
#include "catmode/series.hpp"
#include "catmode/states.hpp"

namespace catmode {

// Per-quantity tolerances a crosscheck must meet.
inline constexpr double kAmplitudeTol = 1e-9;
inline constexpr double kPndTol = 1e-10;
inline constexpr double kMomentTol = 1e-9;
inline constexpr double kConcurrenceTol = 1e-8;
inline constexpr double kResidualTol = 1e-8;

// Brute-force construction: coherent vectors for +-alpha from the Fock
// amplitude formula, m_i creation operators per mode, superposition with
// e^{i phi}, numeric normalization. Uses none of the closed-form constants.
// Throws DegenerateState (squared norm < kDegenerateNormThreshold) or
// TruncationOverflow.
TwoModeState oracle_state(const CatParams& p, FockCutoff cutoff);

// e^{-|alpha|^2/2} alpha^n / sqrt(n!), n = 0..n_max (unnormalized on the grid).
ModeVector coherent_vector(cplx alpha, int n_max);

struct CrosscheckReport {
  CatParams params;
  double max_amp_diff = 0.0;
  double pnd_diff = 0.0;
  double mean_diff = 0.0;  // worst of <n_i> and <a_i^dagger^2 a_i^2> over both modes
  double q_diff = 0.0;
  double c_diff = 0.0;
  double residual = 0.0;
  bool pass = false;
};

// Compares every closed-form quantity against the oracle state, both built at
// twice the default cutoff.
CrosscheckReport crosscheck(const CatParams& p, const SeriesConfig& cfg = {});

// One JSON object (single line, no trailing newline).
std::string to_json_line(const CrosscheckReport& r);

}  // namespace catmode
