#pragma once

#include <vector>

#include "wavetrans/dispersion.hpp"
#include "wavetrans/params.hpp"

namespace wavetrans {

/// One bifurcating family of periodic waves, pinned to a root of D.
struct WaveFamily {
  double k_star;
  int family_index;  // 1 or 2 (Region II ordering k1 < k2); 1 in Region I
  FluidParams params;
};

/// Families at the given parameters, ordered by wavenumber.
std::vector<WaveFamily> wave_families(const FluidParams& params,
                                      double tol = 1e-12);

/// Threshold below which |D(2k*)| counts as second-harmonic resonance.
double resonance_threshold(const WaveFamily& family);

/// c(k*) = -1 - k*(cosh 2k* + 2) / D(2k*). Throws ResonanceError near Gamma_2.
double c_of_kstar(const WaveFamily& family);

/// d(k*) = 32 alpha (2 beta k* (cosh 2k* - 1) + 2k* - sinh 2k*).
double d_of_kstar(const WaveFamily& family);

/// Wavenumber correction: k_eps = k* + eps^2 k2 + O(eps^3).
double k2_coefficient(const WaveFamily& family);

/// Two-term expansion of a periodic wave family. Profiles are in the scaled
/// variable x (period 2pi); the physical variable is X = k_eps x.
struct WaveExpansion {
  WaveFamily family;
  double c_k;
  double d_k;
  double k2;
  double validity_radius = 0.2;

  double k_epsilon(double eps) const { return family.k_star + eps * eps * k2; }

  double eta1(double x) const;
  double phi1(double x, double y) const;
  double eta2(double x) const;
  double phi2(double x, double y) const;

  double eta1_amp() const;   // sinh k*
  double eta2_amp() const;   // (k*/4)(c+1) sinh 2k*
  double eta2_mean() const;  // -k*^2 / (4 alpha)

  /// eta_eps(x) truncated at O(eps^2).
  double surface(double x, double eps) const;
  /// Phi_eps(x, y) truncated at O(eps^2).
  double potential(double x, double y, double eps) const;
};

WaveExpansion make_expansion(const WaveFamily& family);

/// Grid container for exported profiles and surfaces.
struct SurfaceGrid {
  std::vector<double> x_nodes;
  std::vector<double> y_nodes;
  std::vector<double> z_nodes;
  std::vector<double> values;  // row-major over the populated node axes
  double eps = 0.0;
  double delta = 0.0;
  double ell = 0.0;
  double k_star = 0.0;
  double k_eps = 0.0;
};

std::vector<double> uniform_grid(double a, double b, int n);

SurfaceGrid surface_profile(const WaveExpansion& exp, double eps,
                            const std::vector<double>& x_grid);

SurfaceGrid potential_profile(const WaveExpansion& exp, double eps,
                              const std::vector<double>& x_grid,
                              const std::vector<double>& y_grid);

/// Leading-order doubly periodic surface:
/// eta(x, z) = eta_eps(x) + delta sinh(k*) cos(x) cos(ell z).
SurfaceGrid doubly_periodic_surface(const WaveExpansion& exp, double eps,
                                    double delta, double ell,
                                    const std::vector<double>& x_grid,
                                    const std::vector<double>& z_grid);

/// Scale-relative sup-norm residuals of one expansion order. Each entry is
/// sup |residual| / scale with scale the largest contributing term, so the
/// values stay meaningful at large k* where the raw fields grow like cosh k*.
struct ResidualNorms {
  double laplace;
  double bottom;
  double kinematic;
  double bernoulli;

  double max() const;
};

ResidualNorms residual_order1(const WaveExpansion& exp, int nx, int ny);
ResidualNorms residual_order2(const WaveExpansion& exp, int nx, int ny);

}  // namespace wavetrans
