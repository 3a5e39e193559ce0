#include "catmode/fock.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "catmode/errors.hpp"
#include "catmode/io.hpp"

namespace catmode {

void FockCutoff::validate(std::size_t max_amplitudes) const {
  if (n1_max < 0 || n2_max < 0) throw std::invalid_argument("FockCutoff: negative level");
  if (dimension() > max_amplitudes) {
    throw std::invalid_argument("FockCutoff: " + std::to_string(dimension()) +
                                " amplitudes exceed the bound of " +
                                std::to_string(max_amplitudes));
  }
}

int default_mode_cutoff(double abs_alpha, int m) {
  return m + static_cast<int>(std::ceil(abs_alpha * abs_alpha + 10.0 * abs_alpha + 30.0));
}

TwoModeState::TwoModeState(FockCutoff cutoff) : cutoff_(cutoff) {
  cutoff_.validate();
  amp_.assign(cutoff_.dimension(), cplx{});
}

TwoModeState::TwoModeState(FockCutoff cutoff, std::vector<cplx> amplitudes)
    : cutoff_(cutoff), amp_(std::move(amplitudes)) {
  cutoff_.validate();
  if (amp_.size() != cutoff_.dimension()) {
    throw std::invalid_argument("TwoModeState: amplitude count does not match cutoff");
  }
  refresh_tail();
}

TwoModeState TwoModeState::basis(FockCutoff cutoff, int n1, int n2) {
  TwoModeState s(cutoff);
  if (n1 < 0 || n2 < 0 || n1 > cutoff.n1_max || n2 > cutoff.n2_max) {
    throw std::out_of_range("TwoModeState::basis: level outside cutoff");
  }
  s.set_amp(n1, n2, 1.0);
  return s;
}

TwoModeState TwoModeState::product(const ModeVector& mode1, const ModeVector& mode2) {
  if (mode1.empty() || mode2.empty()) {
    throw std::invalid_argument("TwoModeState::product: empty mode vector");
  }
  const FockCutoff cutoff{static_cast<int>(mode1.size()) - 1, static_cast<int>(mode2.size()) - 1};
  std::vector<cplx> amp(cutoff.dimension());
  std::size_t k = 0;
  for (const cplx& a : mode1)
    for (const cplx& b : mode2) amp[k++] = a * b;
  return TwoModeState(cutoff, std::move(amp));
}

void TwoModeState::set_amp(int n1, int n2, cplx value) {
  amp_[index(n1, n2)] = value;
  refresh_tail();
}

void TwoModeState::refresh_tail() {
  const int lo1 = std::max(0, cutoff_.n1_max - 1);
  const int lo2 = std::max(0, cutoff_.n2_max - 1);
  double mass = 0.0;
  for (int n1 = 0; n1 <= cutoff_.n1_max; ++n1) {
    for (int n2 = 0; n2 <= cutoff_.n2_max; ++n2) {
      if (n1 >= lo1 || n2 >= lo2) mass += std::norm(amp_[index(n1, n2)]);
    }
  }
  tail_mass_ = mass;
}

double TwoModeState::tail_mass(Mode mode) const {
  const int top = cutoff_.max_level(mode);
  const int lo = std::max(0, top - 1);
  double mass = 0.0;
  for (int n1 = 0; n1 <= cutoff_.n1_max; ++n1) {
    for (int n2 = 0; n2 <= cutoff_.n2_max; ++n2) {
      const int level = mode == Mode::one ? n1 : n2;
      if (level >= lo) mass += std::norm(amp_[index(n1, n2)]);
    }
  }
  return mass;
}

double TwoModeState::norm_squared() const {
  double total = 0.0;
  for (const cplx& a : amp_) total += std::norm(a);
  return total;
}

void TwoModeState::normalize() {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw DegenerateState("normalize: zero vector");
  const double scale = 1.0 / std::sqrt(n2);
  for (cplx& a : amp_) a *= scale;
  refresh_tail();
}

TwoModeState& TwoModeState::operator+=(const TwoModeState& other) {
  if (!(cutoff_ == other.cutoff_)) throw CutoffMismatch("operator+=: cutoffs differ");
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += other.amp_[i];
  refresh_tail();
  return *this;
}

TwoModeState& TwoModeState::operator-=(const TwoModeState& other) {
  if (!(cutoff_ == other.cutoff_)) throw CutoffMismatch("operator-=: cutoffs differ");
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] -= other.amp_[i];
  refresh_tail();
  return *this;
}

TwoModeState& TwoModeState::operator*=(cplx factor) {
  for (cplx& a : amp_) a *= factor;
  refresh_tail();
  return *this;
}

TwoModeState apply_annihilation(const TwoModeState& s, Mode mode) {
  const FockCutoff& c = s.cutoff();
  TwoModeState out(c);
  for (int n1 = 0; n1 <= c.n1_max; ++n1) {
    for (int n2 = 0; n2 <= c.n2_max; ++n2) {
      if (mode == Mode::one) {
        if (n1 < c.n1_max) out.amp_[out.index(n1, n2)] = std::sqrt(n1 + 1.0) * s.amp(n1 + 1, n2);
      } else {
        if (n2 < c.n2_max) out.amp_[out.index(n1, n2)] = std::sqrt(n2 + 1.0) * s.amp(n1, n2 + 1);
      }
    }
  }
  out.refresh_tail();
  return out;
}

TwoModeState apply_creation(const TwoModeState& s, Mode mode) {
  const FockCutoff& c = s.cutoff();
  const int top = c.max_level(mode);
  const double limit = std::sqrt(kTailMassLimit);
  for (int k = 0; k <= (mode == Mode::one ? c.n2_max : c.n1_max); ++k) {
    const cplx a = mode == Mode::one ? s.amp(top, k) : s.amp(k, top);
    if (std::abs(a) > limit) {
      throw TruncationOverflow("apply_creation: amplitude " + std::to_string(std::abs(a)) +
                               " on the top level of mode " +
                               std::to_string(static_cast<int>(mode)) + " would be lost");
    }
  }
  TwoModeState out(c);
  for (int n1 = 0; n1 <= c.n1_max; ++n1) {
    for (int n2 = 0; n2 <= c.n2_max; ++n2) {
      if (mode == Mode::one) {
        if (n1 > 0) out.amp_[out.index(n1, n2)] = std::sqrt(static_cast<double>(n1)) * s.amp(n1 - 1, n2);
      } else {
        if (n2 > 0) out.amp_[out.index(n1, n2)] = std::sqrt(static_cast<double>(n2)) * s.amp(n1, n2 - 1);
      }
    }
  }
  out.refresh_tail();
  return out;
}

TwoModeState apply_parity(const TwoModeState& s) {
  const FockCutoff& c = s.cutoff();
  std::vector<cplx> amp(s.amplitudes().begin(), s.amplitudes().end());
  std::size_t k = 0;
  for (int n1 = 0; n1 <= c.n1_max; ++n1)
    for (int n2 = 0; n2 <= c.n2_max; ++n2, ++k)
      if ((n1 + n2) % 2 != 0) amp[k] = -amp[k];
  return TwoModeState(c, std::move(amp));
}

TwoModeState apply_number_fn(const TwoModeState& s, Mode mode,
                             const std::function<double(int)>& g) {
  const FockCutoff& c = s.cutoff();
  std::vector<double> weight(c.max_level(mode) + 1);
  for (int n = 0; n <= c.max_level(mode); ++n) weight[n] = g(n);
  std::vector<cplx> amp(s.amplitudes().begin(), s.amplitudes().end());
  std::size_t k = 0;
  for (int n1 = 0; n1 <= c.n1_max; ++n1)
    for (int n2 = 0; n2 <= c.n2_max; ++n2, ++k)
      amp[k] *= weight[mode == Mode::one ? n1 : n2];
  return TwoModeState(c, std::move(amp));
}

cplx inner_product(const TwoModeState& a, const TwoModeState& b) {
  if (!(a.cutoff() == b.cutoff())) throw CutoffMismatch("inner_product: cutoffs differ");
  cplx acc{};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double distance(const TwoModeState& a, const TwoModeState& b) {
  if (!(a.cutoff() == b.cutoff())) throw CutoffMismatch("distance: cutoffs differ");
  double acc = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::norm(x[i] - y[i]);
  return std::sqrt(acc);
}

double max_amplitude_diff(const TwoModeState& a, const TwoModeState& b) {
  if (!(a.cutoff() == b.cutoff())) throw CutoffMismatch("max_amplitude_diff: cutoffs differ");
  double worst = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

double reduced_purity(const TwoModeState& s, Mode mode) {
  const FockCutoff& c = s.cutoff();
  const int rows = c.n1_max + 1;
  const int cols = c.n2_max + 1;
  const auto m = s.amplitudes();
  // Only rows (columns) carrying weight contribute to rho.
  std::vector<int> live;
  const int dim = mode == Mode::one ? rows : cols;
  for (int i = 0; i < dim; ++i) {
    double w = 0.0;
    if (mode == Mode::one) {
      for (int j = 0; j < cols; ++j) w += std::norm(m[i * cols + j]);
    } else {
      for (int j = 0; j < rows; ++j) w += std::norm(m[j * cols + i]);
    }
    if (w > 0.0) live.push_back(i);
  }

  double purity = 0.0;
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a; b < live.size(); ++b) {
      const int i = live[a];
      const int k = live[b];
      cplx rho{};
      if (mode == Mode::one) {
        for (int j = 0; j < cols; ++j) rho += m[i * cols + j] * std::conj(m[k * cols + j]);
      } else {
        for (int j = 0; j < rows; ++j) rho += m[j * cols + i] * std::conj(m[j * cols + k]);
      }
      purity += (a == b ? 1.0 : 2.0) * std::norm(rho);
    }
  }
  return purity;
}

PhotonMoments photon_moments(const TwoModeState& s, Mode mode) {
  const FockCutoff& c = s.cutoff();
  double norm = 0.0;
  double first = 0.0;
  double second = 0.0;
  std::size_t k = 0;
  for (int n1 = 0; n1 <= c.n1_max; ++n1) {
    for (int n2 = 0; n2 <= c.n2_max; ++n2, ++k) {
      const double p = std::norm(s.amplitudes()[k]);
      const double n = mode == Mode::one ? n1 : n2;
      norm += p;
      first += n * p;
      second += n * (n - 1.0) * p;
    }
  }
  if (!(norm > 0.0)) throw DegenerateState("photon_moments: zero vector");
  return {first / norm, second / norm};
}

void write_state_csv(std::ostream& out, const TwoModeState& s) {
  const FockCutoff& c = s.cutoff();
  out << "n1,n2,re,im\n";
  for (int n1 = 0; n1 <= c.n1_max; ++n1) {
    for (int n2 = 0; n2 <= c.n2_max; ++n2) {
      const cplx a = s.amp(n1, n2);
      if (std::abs(a) < 1e-16) continue;
      out << n1 << ',' << n2 << ',' << format_number(a.real()) << ',' << format_number(a.imag())
          << '\n';
    }
  }
}

}  // namespace catmode
