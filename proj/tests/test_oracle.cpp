#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wavetrans/expansion.hpp"
#include "wavetrans/oracle.hpp"
#include "wavetrans/quadrature.hpp"
#include "wavetrans/sampling.hpp"
#include "wavetrans/stability.hpp"

using namespace wavetrans;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto rule = gauss_legendre(6, 0.0, 1.0);
  // degree 11 is the highest exact degree for 6 points
  const double got = integrate(rule, [](double x) { return std::pow(x, 11); });
  CHECK(got == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Gauss-Legendre handles cosh integrands") {
  const auto rule = gauss_legendre(32, 0.0, 1.0);
  const double k = 3.7;
  const double got =
      integrate(rule, [&](double y) { return std::cosh(k * y); });
  CHECK(got == doctest::Approx(std::sinh(k) / k).epsilon(1e-14));
}

TEST_CASE("solvability residual is affine in k2 with root at the closed form") {
  for (const auto& p : region1_samples(4)) {
    const auto fam = wave_families(p).at(0);
    const double k2 = k2_coefficient(fam);

    const double r0 = solvability_residual(fam, 0.0);
    const double r1 = solvability_residual(fam, 1.0);
    const double r2 = solvability_residual(fam, 2.0);
    // affine up to roundoff of the large k2-independent part
    CHECK(std::abs((r2 - r1) - (r1 - r0)) <
          1e-12 * (std::abs(r0) + std::abs(r2) + 1.0));

    CHECK(std::abs(solvability_residual(fam, k2)) <
          1e-12 * (std::abs(r0) + std::abs(k2 * (r1 - r0)) + 1.0));
  }
}

TEST_CASE("k2 recovered from the solvability condition") {
  for (const auto& p : region1_samples(4)) {
    const auto fam = wave_families(p).at(0);
    CHECK(solvability_mismatch(fam) < 1e-10);
  }
  for (const auto& p : region2_samples(3)) {
    for (const auto& fam : wave_families(p)) {
      CHECK(solvability_mismatch(fam) < 1e-10);
    }
  }
}

TEST_CASE("a perturbed k2 violates solvability") {
  const auto fam = wave_families(FluidParams{0.5, 1.0}).at(0);
  const double k2 = k2_coefficient(fam) + 1e-3;
  const double k2_solv = k2_from_solvability(fam);
  CHECK(std::abs(k2 - k2_solv) / (1.0 + std::abs(k2_solv)) > 1e-5);
}

TEST_CASE("inner-product ledger") {
  for (const auto& p : region1_samples(4)) {
    const auto fam = wave_families(p).at(0);
    const auto led = inner_product_ledger(fam);
    CHECK(std::abs(led.psi_zeta_quad - led.psi_zeta_closed) <
          1e-12 * std::abs(led.psi_zeta_closed));
    const double m21 = m21_via_k2(fam, k2_coefficient(fam));
    CHECK(std::abs(led.m21_reconstructed - m21) < 1e-10 * std::abs(m21));
  }
}

TEST_CASE("ledger closed form matches the explicit integral") {
  const auto fam = wave_families(FluidParams{0.4, 0.7}).at(0);
  const double k = fam.k_star, b = fam.params.beta;
  const auto led = inner_product_ledger(fam);
  const double expected =
      M_PI * (0.5 + std::cosh(k) * std::sinh(k) / (2.0 * k) +
              b * std::sinh(k) * std::sinh(k));
  CHECK(led.psi_zeta_closed == doctest::Approx(expected).epsilon(1e-15));
}
