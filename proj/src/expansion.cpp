#include "wavetrans/expansion.hpp"

#include <algorithm>
#include <cmath>

namespace wavetrans {

std::vector<WaveFamily> wave_families(const FluidParams& params, double tol) {
  const auto roots = positive_roots(params, suggested_k_max(params), tol);
  std::vector<WaveFamily> families;
  for (int i = 0; i < roots.count(); ++i) {
    if (roots.multiplicities[i] != Multiplicity::Simple) continue;
    families.push_back(WaveFamily{roots.roots[i],
                                  static_cast<int>(families.size()) + 1,
                                  params});
  }
  return families;
}

double resonance_threshold(const WaveFamily& family) {
  const double k = family.k_star;
  return 1e-8 * (1.0 + family.params.alpha * k * std::cosh(2.0 * k));
}

double c_of_kstar(const WaveFamily& family) {
  const double k = family.k_star;
  const double d2k = dispersion(2.0 * k, family.params);
  if (std::abs(d2k) < resonance_threshold(family)) {
    throw ResonanceError("c_of_kstar: D(2k*) vanishes (second-harmonic "
                         "resonance, parameters on Gamma_2)");
  }
  return -1.0 - k * (std::cosh(2.0 * k) + 2.0) / d2k;
}

double d_of_kstar(const WaveFamily& family) {
  const double k = family.k_star;
  const auto& p = family.params;
  return 32.0 * p.alpha *
         (2.0 * p.beta * k * (std::cosh(2.0 * k) - 1.0) + 2.0 * k -
          std::sinh(2.0 * k));
}

double k2_coefficient(const WaveFamily& family) {
  const double k = family.k_star;
  const auto& p = family.params;
  const double c = c_of_kstar(family);
  const double d = d_of_kstar(family);
  const double dscale =
      32.0 * p.alpha *
      (2.0 * p.beta * k * (std::cosh(2.0 * k) + 1.0) + 2.0 * k +
       std::sinh(2.0 * k));
  if (std::abs(d) < 1e-12 * dscale) {
    throw DegenerateError("k2_coefficient: d(k*) vanishes");
  }
  const double ab = p.alpha * p.beta;
  const double bracket =
      (9.0 * ab + 16.0) * k - 12.0 * ab * k * std::cosh(2.0 * k) +
      3.0 * ab * k * std::cosh(4.0 * k) -
      8.0 * p.alpha * (2.0 * c - 1.0) * std::sinh(2.0 * k) -
      4.0 * p.alpha * (c + 2.0) * std::sinh(4.0 * k);
  return k * k * k / d * bracket;
}

WaveExpansion make_expansion(const WaveFamily& family) {
  return WaveExpansion{family, c_of_kstar(family), d_of_kstar(family),
                       k2_coefficient(family)};
}

double WaveExpansion::eta1_amp() const { return std::sinh(family.k_star); }

double WaveExpansion::eta2_amp() const {
  const double k = family.k_star;
  return 0.25 * k * (c_k + 1.0) * std::sinh(2.0 * k);
}

double WaveExpansion::eta2_mean() const {
  const double k = family.k_star;
  return -k * k / (4.0 * family.params.alpha);
}

double WaveExpansion::eta1(double x) const { return eta1_amp() * std::cos(x); }

double WaveExpansion::phi1(double x, double y) const {
  return std::cosh(family.k_star * y) * std::sin(x);
}

double WaveExpansion::eta2(double x) const {
  return eta2_amp() * std::cos(2.0 * x) + eta2_mean();
}

double WaveExpansion::phi2(double x, double y) const {
  const double k = family.k_star;
  return 0.25 * k *
         (c_k * std::cosh(2.0 * k * y) +
          2.0 * std::sinh(k) * y * std::sinh(k * y)) *
         std::sin(2.0 * x);
}

double WaveExpansion::surface(double x, double eps) const {
  return eps * eta1(x) + eps * eps * eta2(x);
}

double WaveExpansion::potential(double x, double y, double eps) const {
  return eps * phi1(x, y) + eps * eps * phi2(x, y);
}

std::vector<double> uniform_grid(double a, double b, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = a + (b - a) * i / (n - 1);
  }
  return g;
}

SurfaceGrid surface_profile(const WaveExpansion& exp, double eps,
                            const std::vector<double>& x_grid) {
  SurfaceGrid grid;
  grid.x_nodes = x_grid;
  grid.eps = eps;
  grid.k_star = exp.family.k_star;
  grid.k_eps = exp.k_epsilon(eps);
  grid.values.reserve(x_grid.size());
  for (double x : x_grid) grid.values.push_back(exp.surface(x, eps));
  return grid;
}

SurfaceGrid potential_profile(const WaveExpansion& exp, double eps,
                              const std::vector<double>& x_grid,
                              const std::vector<double>& y_grid) {
  SurfaceGrid grid;
  grid.x_nodes = x_grid;
  grid.y_nodes = y_grid;
  grid.eps = eps;
  grid.k_star = exp.family.k_star;
  grid.k_eps = exp.k_epsilon(eps);
  grid.values.reserve(x_grid.size() * y_grid.size());
  for (double x : x_grid) {
    for (double y : y_grid) grid.values.push_back(exp.potential(x, y, eps));
  }
  return grid;
}

SurfaceGrid doubly_periodic_surface(const WaveExpansion& exp, double eps,
                                    double delta, double ell,
                                    const std::vector<double>& x_grid,
                                    const std::vector<double>& z_grid) {
  SurfaceGrid grid;
  grid.x_nodes = x_grid;
  grid.z_nodes = z_grid;
  grid.eps = eps;
  grid.delta = delta;
  grid.ell = ell;
  grid.k_star = exp.family.k_star;
  grid.k_eps = exp.k_epsilon(eps);
  const double amp = delta * std::sinh(exp.family.k_star);
  grid.values.reserve(x_grid.size() * z_grid.size());
  for (double x : x_grid) {
    const double base = exp.surface(x, eps);
    const double mode = amp * std::cos(x);
    for (double z : z_grid) {
      grid.values.push_back(base + mode * std::cos(ell * z));
    }
  }
  return grid;
}

double ResidualNorms::max() const {
  return std::max({laplace, bottom, kinematic, bernoulli});
}

namespace {

struct Accum {
  double resid = 0.0;
  double scale = 1.0;

  void add(double r, double s) {
    resid = std::max(resid, std::abs(r));
    scale = std::max(scale, std::abs(s));
  }
  double norm() const { return resid / scale; }
};

}  // namespace

ResidualNorms residual_order1(const WaveExpansion& exp, int nx, int ny) {
  const double k = exp.family.k_star;
  const auto& p = exp.family.params;
  const double a = std::sinh(k);  // eta_1 amplitude
  const auto xs = uniform_grid(0.0, 2.0 * M_PI, nx);
  const auto ys = uniform_grid(0.0, 1.0, ny);

  Accum lap, bot, kin, ber;
  for (double x : xs) {
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    for (double y : ys) {
      // k^2 Phi_xx + Phi_yy with Phi = cosh(ky) sin x.
      const double pxx = -std::cosh(k * y) * sx;
      const double pyy = k * k * std::cosh(k * y) * sx;
      lap.add(k * k * pxx + pyy, k * k * std::cosh(k * y));
    }
    // Phi_y = 0 on y = 0.
    bot.add(k * std::sinh(0.0) * sx, std::max(1.0, k * std::sinh(k)));
    // Phi_y = -k eta_x on y = 1.
    const double phiy1 = k * std::sinh(k) * sx;
    const double etax = -a * sx;
    kin.add(phiy1 + k * etax, k * std::sinh(k));
    // alpha eta - beta k^2 eta_xx - k Phi_x = 0 on y = 1.
    const double r = p.alpha * a * cx - p.beta * k * k * (-a * cx) -
                     k * std::cosh(k) * cx;
    ber.add(r, (p.alpha + p.beta * k * k) * a + k * std::cosh(k));
  }
  return ResidualNorms{lap.norm(), bot.norm(), kin.norm(), ber.norm()};
}

ResidualNorms residual_order2(const WaveExpansion& exp, int nx, int ny) {
  const double k = exp.family.k_star;
  const auto& p = exp.family.params;
  const double c = exp.c_k;
  const double shk = std::sinh(k);
  const double chk = std::cosh(k);
  const double A = exp.eta2_amp();
  const double M = exp.eta2_mean();
  const auto xs = uniform_grid(0.0, 2.0 * M_PI, nx);
  const auto ys = uniform_grid(0.0, 1.0, ny);

  // Phi_2 = q(y) sin 2x.
  const auto q = [&](double y) {
    return 0.25 * k * (c * std::cosh(2.0 * k * y) + 2.0 * shk * y * std::sinh(k * y));
  };
  const auto qp = [&](double y) {
    return 0.25 * k *
           (2.0 * k * c * std::sinh(2.0 * k * y) +
            2.0 * shk * (std::sinh(k * y) + k * y * std::cosh(k * y)));
  };
  const auto qpp = [&](double y) {
    return 0.25 * k *
           (4.0 * k * k * c * std::cosh(2.0 * k * y) +
            2.0 * shk * (2.0 * k * std::cosh(k * y) + k * k * y * std::sinh(k * y)));
  };

  Accum lap, bot, kin, ber;
  for (double x : xs) {
    const double s2x = std::sin(2.0 * x);
    const double c2x = std::cos(2.0 * x);
    for (double y : ys) {
      const double lhs = -4.0 * k * k * q(y) * s2x + qpp(y) * s2x;
      const double rhs = k * k * shk * s2x *
                         (std::cosh(k * y) - 1.5 * k * y * std::sinh(k * y));
      lap.add(lhs - rhs, std::max(4.0 * k * k * std::abs(q(y)),
                                  k * k * shk * std::cosh(k * y)));
    }
    bot.add(qp(0.0) * s2x, std::max(1.0, std::abs(qp(1.0))));
    {
      const double lhs = qp(1.0) * s2x + k * (-2.0 * A * s2x);
      const double rhs = (0.5 * k * shk * shk - 0.5 * k * k * shk * chk) * s2x;
      kin.add(lhs - rhs,
              std::abs(qp(1.0)) + 2.0 * k * std::abs(A) + 0.5 * k * k * shk * chk);
    }
    {
      const double eta2 = A * c2x + M;
      const double eta2xx = -4.0 * A * c2x;
      const double phi2x = 2.0 * q(1.0) * c2x;
      const double lhs = p.alpha * eta2 - p.beta * k * k * eta2xx - k * phi2x;
      const double rhs = -0.25 * k * k * std::cosh(2.0 * k) * c2x - 0.25 * k * k;
      ber.add(lhs - rhs, (p.alpha + 4.0 * p.beta * k * k) * std::abs(A) +
                             2.0 * k * std::abs(q(1.0)) +
                             0.25 * k * k * std::cosh(2.0 * k));
    }
  }
  return ResidualNorms{lap.norm(), bot.norm(), kin.norm(), ber.norm()};
}

}  // namespace wavetrans
