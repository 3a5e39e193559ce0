#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "catmode/errors.hpp"
#include "catmode/fock.hpp"
#include "catmode/oracle.hpp"
#include "catmode/states.hpp"

using namespace catmode;

namespace {

TwoModeState random_state(FockCutoff c, std::mt19937& rng, int support = 6) {
  std::normal_distribution<double> g;
  TwoModeState s(c);
  for (int a = 0; a <= std::min(support, c.n1_max); ++a)
    for (int b = 0; b <= std::min(support, c.n2_max); ++b) s.set_amp(a, b, {g(rng), g(rng)});
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("cutoff rules") {
  CHECK(default_mode_cutoff(0.0, 0) == 30);
  CHECK(default_mode_cutoff(1.0, 2) == 2 + 41);
  CHECK(default_mode_cutoff(2.5, 3) == 3 + 62);  // ceil(6.25 + 25 + 30)
  CHECK_THROWS_AS((FockCutoff{-1, 3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FockCutoff{3000, 3000}.validate()), std::invalid_argument);
  CHECK_NOTHROW((FockCutoff{1999, 1999}.validate()));
}

TEST_CASE("apply_annihilation") {
  const FockCutoff c{6, 6};
  CHECK(apply_annihilation(TwoModeState::basis(c, 0, 0), Mode::one).norm_squared() == 0.0);

  const TwoModeState out = apply_annihilation(TwoModeState::basis(c, 2, 0), Mode::one);
  CHECK(std::abs(out.amp(1, 0) - std::sqrt(2.0)) < 1e-15);
  CHECK(out.norm_squared() == doctest::Approx(2.0));

  // Coherent states are annihilation eigenvectors.
  const ModeVector coh = build_pacs(0.5, 0, 40);
  const TwoModeState s = TwoModeState::product(coh, ModeVector{1.0});
  CHECK(distance(apply_annihilation(s, Mode::one), cplx{0.5} * s) < 1e-12);
}

TEST_CASE("apply_creation") {
  const FockCutoff c{6, 6};
  const TwoModeState up = apply_creation(TwoModeState::basis(c, 0, 0), Mode::two);
  CHECK(distance(up, TwoModeState::basis(c, 0, 1)) == 0.0);

  const TwoModeState up1 = apply_creation(TwoModeState::basis(c, 1, 0), Mode::one);
  CHECK(std::abs(up1.amp(2, 0) - std::sqrt(2.0)) < 1e-15);

  // (a^dagger)^2 |0.9> normalized equals |0.9, 2>.
  const int n_max = 60;
  TwoModeState s = TwoModeState::product(coherent_vector(0.9, n_max), ModeVector{1.0});
  s = apply_creation(apply_creation(s, Mode::one), Mode::one);
  s.normalize();
  const TwoModeState ref = TwoModeState::product(build_pacs(0.9, 2, n_max), ModeVector{1.0});
  CHECK(max_amplitude_diff(s, ref) < 1e-10);

  CHECK_THROWS_AS(apply_creation(TwoModeState::basis(c, 6, 0), Mode::one), TruncationOverflow);
  CHECK_NOTHROW(apply_creation(TwoModeState::basis(c, 6, 0), Mode::two));
}

TEST_CASE("ladder commutator acts as identity below the cutoff") {
  const FockCutoff c{8, 8};
  for (Mode mode : {Mode::one, Mode::two}) {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const TwoModeState s = TwoModeState::basis(c, a, b);
        const TwoModeState comm = apply_annihilation(apply_creation(s, mode), mode) -
                                  apply_creation(apply_annihilation(s, mode), mode);
        CHECK(distance(comm, s) < 1e-12);
      }
    }
  }
}

TEST_CASE("apply_parity") {
  const FockCutoff c{5, 5};
  CHECK(distance(apply_parity(TwoModeState::basis(c, 0, 0)), TwoModeState::basis(c, 0, 0)) == 0.0);
  CHECK(apply_parity(TwoModeState::basis(c, 1, 0)).amp(1, 0) == cplx{-1.0});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoModeState s = random_state(c, rng);
    const TwoModeState p = apply_parity(s);
    CHECK(p.norm_squared() == doctest::Approx(s.norm_squared()).epsilon(1e-15));
    CHECK(distance(apply_parity(p), s) == 0.0);
  }
}

TEST_CASE("apply_number_fn") {
  const FockCutoff c{6, 6};
  std::mt19937 rng(3);
  const TwoModeState s = random_state(c, rng);
  CHECK(distance(apply_number_fn(s, Mode::one, [](int) { return 1.0; }), s) == 0.0);

  const auto f = [](int n) { return 1.0 - 2.0 / (1.0 + n); };
  CHECK(apply_number_fn(TwoModeState::basis(c, 1, 0), Mode::one, f).norm_squared() == 0.0);

  const TwoModeState n2 =
      apply_number_fn(TwoModeState::basis(c, 3, 5), Mode::two, [](int n) { return double(n); });
  CHECK(n2.amp(3, 5) == cplx{5.0});
}

TEST_CASE("inner_product") {
  const FockCutoff c{4, 4};
  std::mt19937 rng(5);
  const TwoModeState s = random_state(c, rng);
  CHECK(std::abs(inner_product(s, s) - 1.0) < 1e-12);
  CHECK(inner_product(TwoModeState::basis(c, 0, 0), TwoModeState::basis(c, 1, 0)) == cplx{});

  for (int trial = 0; trial < 10; ++trial) {
    const TwoModeState a = random_state(c, rng);
    const TwoModeState b = random_state(c, rng);
    CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-15);
  }

  // <alpha | -alpha> = e^{-2 |alpha|^2}
  const int n_max = 40;
  const TwoModeState plus = TwoModeState::product(build_pacs(0.5, 0, n_max), ModeVector{1.0});
  const TwoModeState minus = TwoModeState::product(build_pacs(-0.5, 0, n_max), ModeVector{1.0});
  CHECK(std::abs(inner_product(plus, minus) - std::exp(-0.5)) < 1e-12);
  CHECK(std::exp(-0.5) == doctest::Approx(0.606531).epsilon(1e-6));

  CHECK_THROWS_AS(inner_product(TwoModeState(FockCutoff{2, 2}), TwoModeState(FockCutoff{2, 3})),
                  CutoffMismatch);
}

TEST_CASE("reduced_purity") {
  const FockCutoff c{4, 4};
  CHECK(reduced_purity(TwoModeState::basis(c, 0, 0), Mode::one) == doctest::Approx(1.0));

  TwoModeState bell = TwoModeState::basis(c, 0, 0) + TwoModeState::basis(c, 1, 1);
  bell.normalize();
  CHECK(reduced_purity(bell, Mode::one) == doctest::Approx(0.5).epsilon(1e-14));

  TwoModeState three = TwoModeState::basis(c, 0, 0) + TwoModeState::basis(c, 1, 1) +
                       TwoModeState::basis(c, 2, 2);
  three.normalize();
  CHECK(reduced_purity(three, Mode::two) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const TwoModeState s = random_state(FockCutoff{6, 9}, rng, 9);
    CHECK(std::abs(reduced_purity(s, Mode::one) - reduced_purity(s, Mode::two)) < 1e-12);
  }
}

TEST_CASE("tail mass tracks the outermost shells") {
  const FockCutoff c{5, 5};
  TwoModeState s(c);
  s.set_amp(0, 0, 0.6);
  CHECK(s.tail_mass() == 0.0);
  s.set_amp(4, 1, 0.8);
  CHECK(s.tail_mass() == doctest::Approx(0.64));
  CHECK(s.tail_mass(Mode::one) == doctest::Approx(0.64));
  CHECK(s.tail_mass(Mode::two) == 0.0);
  s *= 2.0;
  CHECK(s.tail_mass() == doctest::Approx(4 * 0.64));
  s.normalize();
  CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.tail_mass() == doctest::Approx(0.64));
}

TEST_CASE("state CSV dump") {
  const FockCutoff c{2, 2};
  TwoModeState s(c);
  s.set_amp(0, 1, {0.6, 0.0});
  s.set_amp(2, 0, {0.0, -0.8});
  s.set_amp(1, 1, {1e-17, 0.0});
  std::ostringstream out;
  write_state_csv(out, s);
  CHECK(out.str() == "n1,n2,re,im\n0,1,0.6,0\n2,0,0,-0.8\n");
}
