#include "wavetrans/oracle.hpp"

#include <cmath>

#include "wavetrans/quadrature.hpp"

namespace wavetrans {

double solvability_rhs_profile(const WaveFamily& family, double k2, double y) {
  const double k = family.k_star;
  const double a = family.params.alpha;
  const double c = c_of_kstar(family);
  const double sh = std::sinh(k);
  const double sh2 = sh * sh;
  const double k2_ = k * k, k3 = k2_ * k, k4 = k3 * k;
  return (k2_ * sh2 / 4.0 - k4 / (2.0 * a) -
          k3 / 4.0 * (c + 1.0) * std::sinh(2.0 * k) + 2.0 * k * k2) *
             std::cosh(k * y) +
         k3 * sh2 / 2.0 * y * std::sinh(k * y) +
         k3 * c * sh * std::cosh(2.0 * k * y) +
         3.0 * k4 * c * sh / 4.0 * y * std::sinh(2.0 * k * y);
}

namespace {

// First- and second-order fields evaluated at the top boundary y = 1,
// written out independently of the expansion module.
struct TopFields {
  double k, c, sh, e2amp, e2mean, q1, qp1;

  explicit TopFields(const WaveFamily& fam)
      : k(fam.k_star), c(c_of_kstar(fam)), sh(std::sinh(k)) {
    e2amp = 0.25 * k * (c + 1.0) * std::sinh(2.0 * k);
    e2mean = -k * k / (4.0 * fam.params.alpha);
    q1 = 0.25 * k * (c * std::cosh(2.0 * k) + 2.0 * sh * sh);
    qp1 = 0.25 * k *
          (2.0 * k * c * std::sinh(2.0 * k) +
           2.0 * sh * (sh + k * std::cosh(k)));
  }

  double eta1(double x) const { return sh * std::cos(x); }
  double eta1x(double x) const { return -sh * std::sin(x); }
  double eta1xx(double x) const { return -sh * std::cos(x); }
  double eta2(double x) const { return e2amp * std::cos(2.0 * x) + e2mean; }
  double eta2x(double x) const { return -2.0 * e2amp * std::sin(2.0 * x); }
  double p1x(double x) const { return std::cosh(k) * std::cos(x); }
  double p1y(double x) const { return k * sh * std::sin(x); }
  double p2x(double x) const { return 2.0 * q1 * std::cos(2.0 * x); }
  double p2y(double x) const { return qp1 * std::sin(2.0 * x); }
};

// The boundary rows of the order-eps^3 system are trigonometric polynomials
// of low degree, so an equispaced projection onto the first Fourier mode is
// exact up to roundoff.
constexpr int kProjNodes = 16;

template <typename F>
double project_mode1(F&& f, bool sine) {
  double acc = 0.0;
  for (int i = 0; i < kProjNodes; ++i) {
    const double x = 2.0 * M_PI * i / kProjNodes;
    acc += f(x) * (sine ? std::sin(x) : std::cos(x));
  }
  return 2.0 * acc / kProjNodes;
}

}  // namespace

double solvability_g3(const WaveFamily& family, double k2) {
  const TopFields t(family);
  const double k = t.k;
  const double b = family.params.beta;
  return project_mode1(
      [&](double x) {
        return k2 * t.p1x(x) -
               k * (t.eta1x(x) * t.p2y(x) + t.eta2x(x) * t.p1y(x) -
                    t.eta1x(x) * t.eta1(x) * t.p1y(x)) +
               2.0 * b * k * k2 * t.eta1xx(x) -
               1.5 * b * k * k * k * k * t.eta1xx(x) * t.eta1x(x) *
                   t.eta1x(x) -
               k * k * (t.p1x(x) * t.p2x(x) -
                        t.eta1x(x) * t.p1x(x) * t.p1y(x)) -
               t.p1y(x) * t.p2y(x) + t.eta1(x) * t.p1y(x) * t.p1y(x);
      },
      /*sine=*/false);
}

double solvability_f3(const WaveFamily& family, double k2) {
  const TopFields t(family);
  const double k = t.k;
  return project_mode1(
      [&](double x) {
        return -k * (t.eta1(x) * t.eta2x(x) + t.eta1x(x) * t.eta2(x)) -
               k2 * t.eta1x(x) +
               k * k * (t.eta1x(x) * t.p2x(x) + t.eta2x(x) * t.p1x(x) +
                        t.eta1(x) * t.eta1x(x) * t.p1x(x)) -
               k * k * t.eta1x(x) * t.eta1x(x) * t.p1y(x);
      },
      /*sine=*/true);
}

double solvability_residual(const WaveFamily& family, double k2,
                            int quad_points) {
  const double k = family.k_star;
  const auto rule = gauss_legendre(quad_points, 0.0, 1.0);
  const double integral = integrate(rule, [&](double y) {
    return solvability_rhs_profile(family, k2, y) * std::cosh(k * y);
  });
  return solvability_f3(family, k2) * std::cosh(k) +
         solvability_g3(family, k2) * std::sinh(k) - integral;
}

double k2_from_solvability(const WaveFamily& family, int quad_points) {
  // residual(k2) = r0 + s * k2. The slope cannot be taken as a difference of
  // two residuals: their k2-independent parts grow like cosh^3(k*) and
  // swamp the slope in roundoff at large k*. Instead each affine piece is
  // evaluated separately (dF3/dk2 = 2 k* cosh(k* y)).
  const double k = family.k_star;
  const double b = family.params.beta;
  const double r0 = solvability_residual(family, 0.0, quad_points);
  // the boundary terms linear in k2 are -k2 eta_1x (kinematic row) and
  // k2 Phi_1x + 2 beta k* k2 eta_1xx (dynamic row); their mode-1 projections
  const double sf = std::sinh(k);
  const double sg = std::cosh(k) - 2.0 * b * k * std::sinh(k);
  const auto rule = gauss_legendre(quad_points, 0.0, 1.0);
  const double si = integrate(rule, [&](double y) {
    const double c = std::cosh(k * y);
    return 2.0 * k * c * c;
  });
  const double slope = sf * std::cosh(k) + sg * std::sinh(k) - si;
  if (slope == 0.0) {
    throw DegenerateError("k2_from_solvability: degenerate affine slope");
  }
  return -r0 / slope;
}

double solvability_mismatch(const WaveFamily& family, int quad_points) {
  const double k2 = k2_coefficient(family);
  const double k2_solv = k2_from_solvability(family, quad_points);
  return std::abs(k2 - k2_solv) / (1.0 + std::abs(k2_solv));
}

InnerProductLedger inner_product_ledger(const WaveFamily& family,
                                        int quad_points) {
  const double k = family.k_star;
  const double b = family.params.beta;
  const double sh = std::sinh(k);
  const double k2 = k2_coefficient(family);

  InnerProductLedger led{};
  led.psi_zeta_closed =
      M_PI * (0.5 + std::cosh(k) * sh / (2.0 * k) + b * sh * sh);

  // <psi_+, zeta_+*> by quadrature: the x-integrals of sin^2 and cos^2 over a
  // period are pi, leaving a one-dimensional y-integral for the bulk term.
  const auto rule = gauss_legendre(quad_points, 0.0, 1.0);
  const double bulk = integrate(rule, [&](double y) {
    const double c = std::cosh(k * y);
    return c * c;
  });
  led.psi_zeta_quad = M_PI * bulk + M_PI * b * sh * sh;

  led.lhs_chain = M_PI * k2 * std::sinh(2.0 * k);
  led.duk_term = M_PI * k2 * (2.0 * b * k * sh * sh + k);
  led.m21_reconstructed =
      (led.lhs_chain - 2.0 * led.duk_term) / led.psi_zeta_closed;
  return led;
}

}  // namespace wavetrans
