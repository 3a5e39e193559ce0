#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace catmode {

using cplx = std::complex<double>;

enum class Mode { one = 1, two = 2 };

// Amplitudes of a single mode, index = photon number.
using ModeVector = std::vector<cplx>;

inline constexpr std::size_t kDefaultMaxAmplitudes = 4'000'000;

// Truncation threshold used by every consumer of a TwoModeState.
inline constexpr double kTailMassLimit = 1e-10;

struct FockCutoff {
  int n1_max = 0;
  int n2_max = 0;

  std::size_t dimension() const {
    return static_cast<std::size_t>(n1_max + 1) * static_cast<std::size_t>(n2_max + 1);
  }
  int max_level(Mode mode) const { return mode == Mode::one ? n1_max : n2_max; }
  FockCutoff doubled() const { return {2 * n1_max, 2 * n2_max}; }

  void validate(std::size_t max_amplitudes = kDefaultMaxAmplitudes) const;

  friend bool operator==(const FockCutoff&, const FockCutoff&) = default;
};

// m + ceil(|alpha|^2 + 10|alpha| + 30)
int default_mode_cutoff(double abs_alpha, int m);

// Dense two-mode amplitude grid, row-major in n1.
class TwoModeState {
 public:
  explicit TwoModeState(FockCutoff cutoff);
  TwoModeState(FockCutoff cutoff, std::vector<cplx> amplitudes);

  static TwoModeState basis(FockCutoff cutoff, int n1, int n2);
  static TwoModeState product(const ModeVector& mode1, const ModeVector& mode2);

  const FockCutoff& cutoff() const { return cutoff_; }
  std::span<const cplx> amplitudes() const { return amp_; }

  cplx amp(int n1, int n2) const { return amp_[index(n1, n2)]; }
  void set_amp(int n1, int n2, cplx value);

  // |amp|^2 on the two outermost levels of both modes (union).
  double tail_mass() const { return tail_mass_; }
  // |amp|^2 on the two outermost levels of one mode.
  double tail_mass(Mode mode) const;

  double norm_squared() const;
  // Throws DegenerateState for a zero vector.
  void normalize();

  TwoModeState& operator+=(const TwoModeState& other);
  TwoModeState& operator-=(const TwoModeState& other);
  TwoModeState& operator*=(cplx factor);

  friend TwoModeState operator+(TwoModeState a, const TwoModeState& b) { return a += b; }
  friend TwoModeState operator-(TwoModeState a, const TwoModeState& b) { return a -= b; }
  friend TwoModeState operator*(cplx f, TwoModeState a) { return a *= f; }

 private:
  std::size_t index(int n1, int n2) const {
    return static_cast<std::size_t>(n1) * static_cast<std::size_t>(cutoff_.n2_max + 1) +
           static_cast<std::size_t>(n2);
  }
  void refresh_tail();

  FockCutoff cutoff_;
  std::vector<cplx> amp_;
  double tail_mass_ = 0.0;

  friend TwoModeState apply_annihilation(const TwoModeState&, Mode);
  friend TwoModeState apply_creation(const TwoModeState&, Mode);
};

// out(n) = sqrt(n+1) amp(n+1) along mode; the top level becomes zero.
TwoModeState apply_annihilation(const TwoModeState& s, Mode mode);

// out(n+1) = sqrt(n+1) amp(n). Throws TruncationOverflow if any amplitude on the
// top level of the raised mode exceeds sqrt(kTailMassLimit) in magnitude, since
// it would be pushed out of the space.
TwoModeState apply_creation(const TwoModeState& s, Mode mode);

// amp(n1, n2) *= (-1)^(n1 + n2)
TwoModeState apply_parity(const TwoModeState& s);

// amp(n1, n2) *= g(n_mode)
TwoModeState apply_number_fn(const TwoModeState& s, Mode mode,
                             const std::function<double(int)>& g);

// sum conj(a) b. Throws CutoffMismatch.
cplx inner_product(const TwoModeState& a, const TwoModeState& b);

// ||a - b||. Throws CutoffMismatch.
double distance(const TwoModeState& a, const TwoModeState& b);

// max |a - b| over amplitudes. Throws CutoffMismatch.
double max_amplitude_diff(const TwoModeState& a, const TwoModeState& b);

// Tr(rho^2) of the reduced state of `mode`, with rho_1 = M M^dagger and
// rho_2 = M^T conj(M) for the amplitude matrix M.
double reduced_purity(const TwoModeState& s, Mode mode);

// <n_mode> and <a^dagger^2 a^2> over the normalized state.
struct PhotonMoments {
  double mean_n = 0.0;
  double second_moment = 0.0;
};
PhotonMoments photon_moments(const TwoModeState& s, Mode mode);

// CSV dump: header `n1,n2,re,im`, row-major, |amp| < 1e-16 omitted.
void write_state_csv(std::ostream& out, const TwoModeState& s);

}  // namespace catmode
