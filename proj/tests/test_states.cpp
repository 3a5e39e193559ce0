#include <doctest.h>

#include <cmath>
#include <numbers>

#include "catmode/errors.hpp"
#include "catmode/observables.hpp"
#include "catmode/oracle.hpp"
#include "catmode/series.hpp"
#include "catmode/states.hpp"

using namespace catmode;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct long-double evaluation of e^{-x} sum_p (p+m)! x^p / (p!)^2, 200 terms.
double direct_pacs_series(double x, int m) {
  long double total = 0.0L;
  long double term = std::tgamma(static_cast<long double>(m) + 1.0L);  // p = 0
  for (int p = 0; p < 200; ++p) {
    total += term;
    term *= static_cast<long double>(x) * (p + m + 1) / ((p + 1.0L) * (p + 1.0L));
  }
  return static_cast<double>(std::exp(-static_cast<long double>(x)) * total);
}

CatParams fig1() { return {0.9, 0.8, 2, 3, kPi}; }

}  // namespace

TEST_CASE("pacs_norm_k") {
  for (double a : {0.0, 0.3, 1.7, 3.0}) CHECK(pacs_norm_k(a, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pacs_norm_k(0.0, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  // Series = m! L_m(-|alpha|^2) = L_1(-1) = 2 for alpha = 1, m = 1.
  CHECK(laguerre(1, -1.0) == 2.0);
  CHECK(direct_pacs_series(1.0, 1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pacs_norm_k(1.0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));

  for (int m : {1, 3, 6, 10}) {
    for (double a : {0.2, 0.9, 2.0, 3.0}) {
      const double ref = 1.0 / std::sqrt(direct_pacs_series(a * a, m));
      CHECK(pacs_norm_k(a, m) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
  // Depends on |alpha| only.
  CHECK(pacs_norm_k({0.3, -1.1}, 4) == doctest::Approx(pacs_norm_k(std::abs(cplx{0.3, -1.1}), 4)).epsilon(1e-15));
}

TEST_CASE("cat_norm_N3") {
  CHECK(cat_norm_N3({0.0, 0.0, 2, 3, 0.0}) == doctest::Approx(1.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-14));

  // m = 0 resums to 2 (1 + cos(phi) e^{-2S}).
  const double ref = 1.0 / std::sqrt(2.0 * (1.0 - std::exp(-2.9)));
  CHECK(cat_norm_N3({0.9, 0.8, 0, 0, kPi}) == doctest::Approx(ref).epsilon(1e-13));
  CHECK(ref == doctest::Approx(0.72737).epsilon(1e-4));

  CHECK_THROWS_AS(cat_norm_N3({0.0, 0.0, 1, 2, kPi}), DegenerateState);
  CHECK_THROWS_AS(cat_norm_N3({0.0, 0.0, 0, 0, kPi}), DegenerateState);
  CHECK((CatParams{0.0, 0.0, 4, 4, kPi}.is_degenerate()));
  CHECK_FALSE((CatParams{0.0, 0.1, 4, 4, kPi}.is_degenerate()));
}

TEST_CASE("CatParams validation") {
  CHECK_THROWS_AS((CatParams{0.5, 0.5, -1, 0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CatParams{0.5, 0.5, 0, 0, 2 * kPi}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CatParams{0.5, 0.5, 0, 0, -0.1}.validate()), std::invalid_argument);
  CHECK_NOTHROW((CatParams{0.5, 0.5, 0, 0, 1.5 * kPi}.validate()));
}

TEST_CASE("build_pacs") {
  const ModeVector fock = build_pacs(0.0, 3, 20);
  for (int n = 0; n <= 20; ++n) CHECK(fock[n] == cplx{n == 3 ? 1.0 : 0.0});

  const ModeVector coh = build_pacs(0.5, 0, 40);
  const TwoModeState s = TwoModeState::product(coh, ModeVector{1.0});
  CHECK(distance(apply_annihilation(s, Mode::one), cplx{0.5} * s) < 1e-10);

  const ModeVector v = build_pacs(0.9, 2, 60);
  CHECK(v[0] == cplx{});
  CHECK(v[1] == cplx{});
  double norm = 0.0;
  for (const cplx& a : v) norm += std::norm(a);
  CHECK(std::abs(norm - 1.0) < 1e-10);

  CHECK_THROWS_AS(build_pacs(3.0, 2, 12), TruncationOverflow);
  CHECK_THROWS_AS(build_pacs(0.5, 4, 4), TruncationOverflow);
}

TEST_CASE("build_pa2cat") {
  SUBCASE("vacuum") {
    const TwoModeState s = build_pa2cat({0.0, 0.0, 0, 0, 0.0}, FockCutoff{10, 10});
    CHECK(distance(s, TwoModeState::basis(FockCutoff{10, 10}, 0, 0)) < 1e-15);
  }

  SUBCASE("support shift and parity selection are exact") {
    const CatParams p = fig1();
    const FockCutoff c = default_cutoff(p);
    const TwoModeState s = build_pa2cat(p, c);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-10);
    for (int n1 = 0; n1 <= c.n1_max; ++n1) {
      for (int n2 = 0; n2 <= c.n2_max; ++n2) {
        const bool allowed = n1 >= 2 && n2 >= 3 && (n1 + n2 - 5) % 2 != 0;
        if (!allowed) CHECK(s.amp(n1, n2) == cplx{});
      }
    }
    CHECK(std::abs(s.amp(3, 3)) > 0.0);
  }

  SUBCASE("phi = 0 keeps only even offsets") {
    const CatParams p{1.2, 0.7, 1, 2, 0.0};
    const FockCutoff c = default_cutoff(p);
    const TwoModeState s = build_pa2cat(p, c);
    for (int n1 = 0; n1 <= c.n1_max; ++n1)
      for (int n2 = 0; n2 <= c.n2_max; ++n2)
        if ((n1 + n2 - 3) % 2 != 0 || n1 < 1 || n2 < 2) CHECK(s.amp(n1, n2) == cplx{});
  }

  SUBCASE("plain cat is an a1 a2 eigenstate") {
    for (double a : {0.3, 0.9, 1.5}) {
      for (double phi : {0.0, kPi / 2, kPi}) {
        const CatParams p{a, 0.7, 0, 0, phi};
        const TwoModeState s = build_pa2cat(p, default_cutoff(p));
        const TwoModeState aa = apply_annihilation(apply_annihilation(s, Mode::two), Mode::one);
        CHECK(distance(aa, (p.alpha1 * p.alpha2) * s) < 1e-10);
      }
    }
  }

  SUBCASE("nonlinear eigenvalue relation") {
    for (const CatParams& p : {fig1(), CatParams{1.5, 0.4, 3, 1, kPi / 2}, CatParams{{0.6, 0.8}, {-0.2, 1.1}, 2, 2, 1.0}}) {
      const TwoModeState s = build_pa2cat(p, default_cutoff(p));
      CHECK(eigen_residual(s, p) < 1e-8);
    }
  }

  SUBCASE("N3 agrees with the numeric norm") {
    for (const CatParams& p : {fig1(), CatParams{2.5, 0.1, 3, 0, 0.0}, CatParams{0.1, 0.1, 1, 1, kPi}}) {
      const double n3 = cat_norm_N3(p);
      TwoModeState s = build_pa2cat(p, default_cutoff(p));
      // Undo the closed-form constant and renormalize numerically.
      s *= 1.0 / n3;
      const double numeric = 1.0 / std::sqrt(s.norm_squared());
      CHECK(std::abs(numeric - n3) <= 1e-9 * n3);
    }
  }

  SUBCASE("matches the oracle state") {
    for (const CatParams& p : {fig1(), CatParams{{0.3, 0.4}, 1.1, 1, 2, kPi / 2}, CatParams{2.5, 2.5, 3, 3, kPi}}) {
      const FockCutoff c = default_cutoff(p);
      CHECK(max_amplitude_diff(build_pa2cat(p, c), oracle_state(p, c)) < 1e-9);
    }
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(build_pa2cat({0.0, 0.0, 0, 0, kPi}, FockCutoff{10, 10}), DegenerateState);
    CHECK_THROWS_AS(build_pa2cat({2.5, 0.5, 0, 0, 0.0}, FockCutoff{10, 10}), TruncationOverflow);
  }
}

TEST_CASE("build_parity_transformed") {
  CHECK_THROWS_AS(build_parity_transformed({0.9, 0.8, 2, 3, 0.0}, FockCutoff{40, 40}), DegenerateState);

  SUBCASE("plain cat satisfies the transformed a1 a2 relation") {
    const CatParams p{0.9, 0.8, 0, 0, kPi};
    const TwoModeState s = build_parity_transformed(p, default_cutoff(p));
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
    const TwoModeState v = apply_parity(apply_annihilation(apply_parity(apply_annihilation(s, Mode::two)), Mode::one));
    CHECK(distance(v, (p.alpha1 * p.alpha2) * s) < 1e-8);
    CHECK(parity_eigen_residual(s, p) < 1e-8);
  }

  SUBCASE("photon-added transformed state") {
    for (const CatParams& p : {CatParams{0.9, 0.8, 2, 3, kPi}, CatParams{1.4, 0.5, 1, 1, kPi / 2}, CatParams{2.0, 1.0, 3, 0, 1.0}}) {
      const TwoModeState s = build_parity_transformed(p, default_cutoff(p));
      CHECK(parity_eigen_residual(s, p) < 1e-8);
    }
  }

  SUBCASE("normalized state does not depend on phi") {
    const TwoModeState a = build_parity_transformed({0.9, 0.8, 2, 3, kPi}, FockCutoff{45, 45});
    const TwoModeState b = build_parity_transformed({0.9, 0.8, 2, 3, kPi / 2}, FockCutoff{45, 45});
    CHECK(max_amplitude_diff(a, b) < 1e-15);
  }
}
