#pragma once

#include <vector>

#include "catmode/fock.hpp"
#include "catmode/series.hpp"
#include "catmode/states.hpp"

namespace catmode {

// Joint photon-number distribution P(q1, q2) on [0..q1_max] x [0..q2_max].
struct PndGrid {
  int q1_max = 0;
  int q2_max = 0;
  std::vector<double> prob;  // row-major in q1
  double total = 0.0;

  double at(int q1, int q2) const {
    return prob[static_cast<std::size_t>(q1) * static_cast<std::size_t>(q2_max + 1) +
                static_cast<std::size_t>(q2)];
  }
};

struct MandelReport {
  double mean_n = 0.0;
  double second_moment = 0.0;
  double q = 0.0;
};

// Closed-form P(q1, q2). Exactly 0 below the support shift (q_i < m_i) and on
// parity-forbidden entries.
double pnd(const CatParams& p, int q1, int q2, const SeriesConfig& cfg = {});

PndGrid pnd_grid(const CatParams& p, int q1_max, int q2_max, const SeriesConfig& cfg = {});

// |amp|^2 of a state vector laid out as a PndGrid.
PndGrid pnd_from_state(const TwoModeState& s);

// <n_i> from the double series 2 (N3 e^{-S/2})^2 sum [...] (p_i + m_i) (1 + (-1)^{p1+p2} cos phi).
double mean_photon(const CatParams& p, Mode mode, const SeriesConfig& cfg = {});

// <a_i^dagger^2 a_i^2>, same series with weight (p_i + m_i)(p_i + m_i - 1).
double second_moment(const CatParams& p, Mode mode, const SeriesConfig& cfg = {});

// Q = (<a^dagger^2 a^2> - <n>^2) / <n>. Throws UndefinedMandel if <n> <= 1e-12.
MandelReport mandel_q(const CatParams& p, Mode mode, const SeriesConfig& cfg = {});

// Same quantity from a state vector.
MandelReport mandel_from_state(const TwoModeState& s, Mode mode);

// f(n, m) = 1 - m / (1 + n)
double nonlinear_f(int n, int m);

// ||f1 f2 a1 a2 s - eigenvalue s||. Throws TruncationOverflow when
// s.tail_mass() > kTailMassLimit.
double eigen_residual(const TwoModeState& s, const CatParams& p, cplx eigenvalue);

// eigenvalue = alpha1 alpha2
double eigen_residual(const TwoModeState& s, const CatParams& p);

// ||F1 F2 A1 A2 s - alpha1 alpha2 s|| with A_i = P a_i (P the two-mode parity)
// and F_i = f_i.
double parity_eigen_residual(const TwoModeState& s, const CatParams& p);

}  // namespace catmode
