#pragma once

#include <complex>

#include "catmode/fock.hpp"
#include "catmode/series.hpp"

namespace catmode {

// Parameters of N3 a1^dagger^m1 a2^dagger^m2 (|a1, a2> + e^{i phi} |-a1, -a2>).
struct CatParams {
  cplx alpha1{};
  cplx alpha2{};
  int m1 = 0;
  int m2 = 0;
  double phi = 0.0;  // radians, [0, 2 pi)

  // |alpha1| = |alpha2| = 0 with cos(phi) = -1: the superposition is the zero vector.
  bool is_degenerate() const;

  // Range checks (m >= 0, phi in [0, 2 pi), finite amplitudes). Throws
  // std::invalid_argument. Degeneracy is reported separately by constructors.
  void validate() const;
};

struct CatNormalization {
  double n3 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
};

// Squared-norm sums below this are treated as the zero vector.
inline constexpr double kDegenerateNormThreshold = 1e-14;

// Poisson-weighted sums of (p + m)! |alpha|^{2p} / (p!)^2 split by parity of p,
// each scaled by e^{-|alpha|^2}. even + odd = k^{-2}; even - odd = P / k^2.
struct PacsSums {
  double even = 0.0;
  double odd = 0.0;

  double total() const { return even + odd; }
};
PacsSums pacs_sums(cplx alpha, int m, const SeriesConfig& cfg = {});

// k(alpha, m) = (e^{-|alpha|^2} sum_p (p+m)! |alpha|^{2p} / (p!)^2)^{-1/2}
double pacs_norm_k(cplx alpha, int m, const SeriesConfig& cfg = {});

// N3 from its double series. Throws DegenerateState when the bracketed sum is
// below kDegenerateNormThreshold.
double cat_norm_N3(const CatParams& p, const SeriesConfig& cfg = {});

CatNormalization cat_normalization(const CatParams& p, const SeriesConfig& cfg = {});

// Default truncation for a parameter point (per-mode default_mode_cutoff).
FockCutoff default_cutoff(const CatParams& p);

// Normalized photon-added coherent state |alpha, m> on levels 0..n_max.
// Throws TruncationOverflow when the two top levels carry more than
// kTailMassLimit.
ModeVector build_pacs(cplx alpha, int m, int n_max, const SeriesConfig& cfg = {});

// Closed-form number-basis expansion of the photon-added two-mode cat.
// Amplitudes below the support shift and parity-forbidden entries are exact zeros.
TwoModeState build_pa2cat(const CatParams& p, FockCutoff cutoff, const SeriesConfig& cfg = {});

// Parity-transformed photon-added cat:
//   e^{-i pi/4} |i s a1, m1> |i s a2, m2> + e^{i pi/4} |-i s a1, m1> |-i s a2, m2>,
// s = (-1)^{m1 + m2}, normalized numerically. The literal prefactor (1 - e^{i phi})
// makes phi = 0 degenerate.
TwoModeState build_parity_transformed(const CatParams& p, FockCutoff cutoff,
                                      const SeriesConfig& cfg = {});

}  // namespace catmode
