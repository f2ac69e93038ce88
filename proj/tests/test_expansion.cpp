#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wavetrans/expansion.hpp"
#include "wavetrans/sampling.hpp"

using namespace wavetrans;

namespace {
WaveFamily sample_family() {
  const FluidParams p{0.5, 1.0};
  return wave_families(p).at(0);
}
}  // namespace

TEST_CASE("wave_families ordering and indexing") {
  const FluidParams p{2.0, 0.05};
  const auto fams = wave_families(p);
  REQUIRE(fams.size() == 2);
  CHECK(fams[0].k_star < fams[1].k_star);
  CHECK(fams[0].family_index == 1);
  CHECK(fams[1].family_index == 2);
}

TEST_CASE("k_epsilon quadratic correction") {
  const auto exp = make_expansion(sample_family());
  const double eps = 0.05;
  CHECK(exp.k_epsilon(eps) == exp.family.k_star + eps * eps * exp.k2);
  CHECK(exp.k_epsilon(0.0) == exp.family.k_star);
  CHECK(exp.k_epsilon(eps) == exp.k_epsilon(-eps));
}

TEST_CASE("c diverges at second-harmonic resonance") {
  // on Gamma_2 the smaller root has D(2 k*) = 0
  const auto g2 = gamma_m_point(2, 1.0);
  const WaveFamily f{1.0, 1, g2.params};
  CHECK_THROWS_AS(c_of_kstar(f), ResonanceError);
}

TEST_CASE("first-order profiles") {
  const auto exp = make_expansion(sample_family());
  const double k = exp.family.k_star;
  CHECK(exp.eta1(0.0) == doctest::Approx(std::sinh(k)).epsilon(1e-15));
  CHECK(exp.phi1(M_PI / 2.0, 1.0) ==
        doctest::Approx(std::cosh(k)).epsilon(1e-15));
  CHECK(exp.phi1(0.0, 0.7) == 0.0);
}

TEST_CASE("second-order mean and amplitude") {
  const auto exp = make_expansion(sample_family());
  const double k = exp.family.k_star;
  CHECK(exp.eta2_mean() ==
        doctest::Approx(-k * k / (4.0 * exp.family.params.alpha))
            .epsilon(1e-15));
  CHECK(exp.eta2(0.0) ==
        doctest::Approx(exp.eta2_amp() + exp.eta2_mean()).epsilon(1e-12));
}

TEST_CASE("surface truncation composes the orders") {
  const auto exp = make_expansion(sample_family());
  const double eps = 0.07, x = 1.3;
  CHECK(exp.surface(x, eps) ==
        doctest::Approx(eps * exp.eta1(x) + eps * eps * exp.eta2(x))
            .epsilon(1e-15));
  CHECK(exp.surface(x, 0.0) == 0.0);
}

TEST_CASE("symmetries") {
  const auto exp = make_expansion(sample_family());
  const double eps = 0.1;
  for (double x : {0.1, 0.9, 2.2, 3.0}) {
    CHECK(exp.surface(x, eps) == exp.surface(-x, eps));          // eta even
    CHECK(exp.potential(x, 0.5, eps) == -exp.potential(-x, 0.5, eps));
    // eps -> -eps is a half-period shift
    CHECK(exp.surface(x, eps) ==
          doctest::Approx(exp.surface(x + M_PI, -eps)).epsilon(1e-13));
  }
}

TEST_CASE("residuals vanish to the stated order") {
  for (const auto& p : region1_samples(4)) {
    const auto exp = make_expansion(wave_families(p).at(0));
    CHECK(residual_order1(exp, 32, 16).max() < 1e-10);
    CHECK(residual_order2(exp, 32, 16).max() < 1e-10);
  }
  for (const auto& p : region2_samples(3)) {
    for (const auto& fam : wave_families(p)) {
      const auto exp = make_expansion(fam);
      CHECK(residual_order1(exp, 32, 16).max() < 1e-10);
      CHECK(residual_order2(exp, 32, 16).max() < 1e-10);
    }
  }
}

TEST_CASE("grids") {
  const auto g = uniform_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);

  const auto exp = make_expansion(sample_family());
  const auto xs = uniform_grid(0.0, 2.0 * M_PI, 16);
  const auto zs = uniform_grid(0.0, 4.0, 8);
  const auto surf = doubly_periodic_surface(exp, 0.1, 0.01, 1.2, xs, zs);
  CHECK(surf.values.size() == xs.size() * zs.size());
  CHECK(surf.ell == 1.2);

  // delta = 0 collapses to the two-dimensional profile replicated over z
  const auto flat = doubly_periodic_surface(exp, 0.1, 0.0, 1.2, xs, zs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) {
      CHECK(flat.values[i * zs.size() + j] == exp.surface(xs[i], 0.1));
    }
  }
}
