#include "wavetrans/linop.hpp"

#include <algorithm>
#include <cmath>

#include "wavetrans/dispersion.hpp"
#include "wavetrans/expansion.hpp"

namespace wavetrans {

YProfile YProfile::zero() {
  auto z = [](double) { return 0.0; };
  return YProfile{z, z, z};
}

YProfile YProfile::constant(double c) {
  auto z = [](double) { return 0.0; };
  return YProfile{[c](double) { return c; }, z, z};
}

YProfile YProfile::cosh_mode(double k) {
  return YProfile{[k](double y) { return std::cosh(k * y); },
                  [k](double y) { return k * std::sinh(k * y); },
                  [k](double y) { return k * k * std::cosh(k * y); }};
}

EigenBasis0 eigen_basis0(double k_star, const FluidParams& params) {
  const double a = std::sinh(k_star);
  EigenBasis0 b;

  b.zeta0 = StateVector4{0, false, 0.0, 0.0, YProfile::constant(1.0),
                         YProfile::zero()};
  b.psi0 = StateVector4{0, false, 0.0, 0.0, YProfile::zero(),
                        YProfile::constant(1.0)};

  b.zeta_plus = StateVector4{1, true, a, 0.0, YProfile::cosh_mode(k_star),
                             YProfile::zero()};
  b.psi_plus = StateVector4{1, true, 0.0, params.beta * a, YProfile::zero(),
                            YProfile::cosh_mode(k_star)};

  b.zeta_minus = StateVector4{1, false, -a, 0.0, YProfile::cosh_mode(k_star),
                              YProfile::zero()};
  b.psi_minus = StateVector4{1, false, 0.0, -params.beta * a,
                             YProfile::zero(), YProfile::cosh_mode(k_star)};
  return b;
}

L0Image l0_apply(const StateVector4& state, double k_star,
                 const FluidParams& params) {
  const int n = state.mode;
  const double k = k_star;
  // Phi_x swaps sin <-> cos; the sign depends on the parity block.
  // S-symmetric block: Phi = p(y) sin(nx), so Phi_x = n p cos(nx) and the
  // Bernoulli row takes -k n p(1). Antisymmetric block: Phi = p(y) cos(nx),
  // Phi_x = -n p sin(nx), so the row takes +k n p(1). B_l0 = -k y eta_x
  // flips sign the same way.
  const double sgn = state.s_symmetric ? 1.0 : -1.0;

  L0Image out;
  out.image.mode = n;
  out.image.s_symmetric = state.s_symmetric;

  out.image.eta = state.omega / params.beta;
  out.image.omega = params.alpha * state.eta +
                    params.beta * k * k * n * n * state.eta -
                    sgn * k * n * state.phi.value(1.0);
  out.image.phi = state.xi;

  const auto p = state.phi;
  const double kk = k * k * n * n;
  out.image.xi = YProfile{
      [p, kk](double y) { return kk * p.value(y) - p.second(y); },
      [](double) { return 0.0; },   // not propagated
      [](double) { return 0.0; }};

  const double bterm = sgn * k * n * state.eta;  // B_l0 amplitude is bterm * y
  out.bc_bottom = state.phi.deriv(0.0);
  out.bc_top = state.phi.deriv(1.0) - bterm;
  return out;
}

double l0_residual_norm(const StateVector4& u, const StateVector4& target,
                        double k_star, const FluidParams& params, int nx,
                        int ny) {
  const L0Image img = l0_apply(u, k_star, params);
  const auto xs = uniform_grid(0.0, 2.0 * M_PI, nx);
  const auto ys = uniform_grid(0.0, 1.0, ny);
  const int n = u.mode;

  double resid = 0.0;
  double scale = 1.0;
  const auto track = [&](double r, double s) {
    resid = std::max(resid, std::abs(r));
    scale = std::max(scale, std::abs(s));
  };

  // Trig factors: eta/omega rows vs Phi/xi rows of the block.
  const auto trig_scalar = [&](double x) {
    return u.s_symmetric ? std::cos(n * x) : std::sin(n * x);
  };
  const auto trig_field = [&](double x) {
    return u.s_symmetric ? std::sin(n * x) : std::cos(n * x);
  };

  for (double x : xs) {
    const double ts = trig_scalar(x);
    const double tf = trig_field(x);
    track((img.image.eta - target.eta) * ts, img.image.eta);
    track((img.image.omega - target.omega) * ts,
          (params.alpha + params.beta * k_star * k_star * n * n) *
                  std::abs(u.eta) +
              k_star * n * std::abs(u.phi.value(1.0)));
    for (double y : ys) {
      track((img.image.phi.value(y) - target.phi.value(y)) * tf,
            std::abs(img.image.phi.value(y)));
      track((img.image.xi.value(y) - target.xi.value(y)) * tf,
            k_star * k_star * n * n * std::abs(u.phi.value(y)) +
                std::abs(u.phi.second(y)));
    }
    track(img.bc_bottom * tf, std::abs(u.phi.deriv(1.0)) + 1.0);
    track(img.bc_top * tf, std::abs(u.phi.deriv(1.0)) + 1.0);
  }
  return resid / scale;
}

double JordanResiduals::max() const {
  return std::max({zeta0, zeta_minus, zeta_plus, psi0, psi_minus, psi_plus});
}

JordanResiduals jordan_chain_residuals(double k_star,
                                       const FluidParams& params, int nx,
                                       int ny) {
  const auto b = eigen_basis0(k_star, params);
  StateVector4 zero0{0, false, 0, 0, YProfile::zero(), YProfile::zero()};
  StateVector4 zero1s{1, true, 0, 0, YProfile::zero(), YProfile::zero()};
  StateVector4 zero1a{1, false, 0, 0, YProfile::zero(), YProfile::zero()};

  JordanResiduals r{};
  r.zeta0 = l0_residual_norm(b.zeta0, zero0, k_star, params, nx, ny);
  r.zeta_minus = l0_residual_norm(b.zeta_minus, zero1a, k_star, params, nx, ny);
  r.zeta_plus = l0_residual_norm(b.zeta_plus, zero1s, k_star, params, nx, ny);
  r.psi0 = l0_residual_norm(b.psi0, b.zeta0, k_star, params, nx, ny);
  r.psi_minus = l0_residual_norm(b.psi_minus, b.zeta_minus, k_star, params, nx, ny);
  r.psi_plus = l0_residual_norm(b.psi_plus, b.zeta_plus, k_star, params, nx, ny);
  return r;
}

double transverse_mode_det(int n, double ell, double k_star,
                           const FluidParams& params) {
  const double nk2 = static_cast<double>(n) * n * k_star * k_star;
  const double sigma = std::sqrt(nk2 + ell * ell);
  return (params.alpha + params.beta * sigma * sigma) * sigma *
             std::sinh(sigma) -
         nk2 * std::cosh(sigma);
}

bool transverse_scan_expected_clean(double k_star, const FluidParams& params) {
  // det = sigma*D(sigma) + ell^2 cosh(sigma) with sigma = sqrt(n^2 k*^2 + ell^2),
  // so a zero needs D(sigma) < 0, i.e. sigma strictly between the two
  // dispersion roots. With one root that window sits below k*; with two
  // roots it is reachable only from the smaller-root family when 2 k* < k2.
  const auto rs = positive_roots(params, suggested_k_max(params));
  if (rs.count() < 2) return true;
  const double k1 = rs.roots.front();
  const double k2 = rs.roots.back();
  if (k_star > 0.5 * (k1 + k2)) return true;
  return 2.0 * k_star > k2;
}

std::vector<std::pair<int, double>> transverse_spectrum_scan(
    double k_star, const FluidParams& params, int n_max, double ell_max,
    int grid_density, double ell_floor) {
  std::vector<std::pair<int, double>> zeros;
  for (int n = 0; n <= n_max; ++n) {
    double prev_ell = ell_floor;
    double prev = transverse_mode_det(n, prev_ell, k_star, params);
    for (int i = 1; i <= grid_density; ++i) {
      const double ell =
          ell_floor + (ell_max - ell_floor) * i / grid_density;
      const double cur = transverse_mode_det(n, ell, k_star, params);
      if ((prev <= 0.0) != (cur <= 0.0)) {
        double lo = prev_ell, hi = ell, flo = prev;
        for (int it = 0; it < 100; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = transverse_mode_det(n, mid, k_star, params);
          if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        zeros.emplace_back(n, 0.5 * (lo + hi));
      }
      prev_ell = ell;
      prev = cur;
    }
  }
  return zeros;
}

ReducedMatrixModel reduced_matrix(double eps, double m21_2) {
  ReducedMatrixModel m;
  m.m21_2 = m21_2;
  m.eps = eps;
  m.det_m = -m21_2 * eps * eps;
  m.imaginary_pair = m.det_m > 0.0;
  m.eigen_magnitude = std::sqrt(std::abs(m.det_m));
  return m;
}

double ell_eps_estimate(double eps, double m21_2) {
  if (eps == 0.0) return 0.0;
  if (!(m21_2 < 0.0)) {
    throw DegenerateError(
        "ell_eps_estimate: m21_2 >= 0, no imaginary pair at leading order");
  }
  return std::abs(eps) * std::sqrt(-m21_2);
}

}  // namespace wavetrans
