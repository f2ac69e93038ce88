#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wavetrans/params.hpp"

namespace wavetrans {

/// Analytic y-profile on [0,1] with its first two derivatives.
struct YProfile {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> second;

  static YProfile zero();
  static YProfile constant(double c);
  static YProfile cosh_mode(double k);  // cosh(k y)
};

/// A single-Fourier-mode state (eta, omega, Phi, xi). The reflection parity
/// fixes the trigonometric factors: in the S-symmetric block eta and omega
/// carry cos(nx) while Phi and xi carry sin(nx); in the S-antisymmetric block
/// the factors are swapped.
struct StateVector4 {
  int mode = 0;
  bool s_symmetric = true;
  double eta = 0.0;
  double omega = 0.0;
  YProfile phi = YProfile::zero();
  YProfile xi = YProfile::zero();
};

/// The six explicit basis vectors of the zero eigenspace of L0.
struct EigenBasis0 {
  StateVector4 zeta0, zeta_minus, zeta_plus;
  StateVector4 psi0, psi_minus, psi_plus;
};

EigenBasis0 eigen_basis0(double k_star, const FluidParams& params);

/// L0 applied to a single mode, plus the boundary mismatches
/// Phi_y - B_l0 at y = 0 and y = 1 (amplitudes of the trig factor).
struct L0Image {
  StateVector4 image;
  double bc_bottom = 0.0;
  double bc_top = 0.0;
};

L0Image l0_apply(const StateVector4& state, double k_star,
                 const FluidParams& params);

/// Scale-relative sup-norm of L0 u - target over an nx-by-ny grid,
/// boundary rows included.
double l0_residual_norm(const StateVector4& u, const StateVector4& target,
                        double k_star, const FluidParams& params, int nx,
                        int ny);

struct JordanResiduals {
  double zeta0, zeta_minus, zeta_plus;
  double psi0, psi_minus, psi_plus;

  double max() const;
};

/// Residuals of L0 zeta = 0 (three) and L0 psi = zeta (three).
JordanResiduals jordan_chain_residuals(double k_star,
                                       const FluidParams& params, int nx,
                                       int ny);

/// (alpha + beta sigma^2) sigma sinh(sigma) - n^2 k*^2 cosh(sigma),
/// sigma^2 = n^2 k*^2 + ell^2. Zeros mark purely imaginary eigenvalues
/// i ell of L0 in the nth mode.
double transverse_mode_det(int n, double ell, double k_star,
                           const FluidParams& params);

/// Sign-change scan of the transverse mode determinant over
/// ell in [ell_floor, ell_max] for each n <= n_max.
std::vector<std::pair<int, double>> transverse_spectrum_scan(
    double k_star, const FluidParams& params, int n_max, double ell_max,
    int grid_density, double ell_floor = 0.05);

/// True when the scan is guaranteed empty: the determinant can only
/// vanish where the dispersion function is negative, a window the modes
/// of this wave cannot reach. False for the smaller-root family of a
/// two-root parameter pair when 2 k* < k2; those zeros are structural.
bool transverse_scan_expected_clean(double k_star, const FluidParams& params);

/// Leading-order model of the reduced 2x2 matrix M(eps):
/// det M = -m21_2 eps^2, trace zero, eigenvalues +-sqrt(-det M).
struct ReducedMatrixModel {
  double m21_2;
  double eps;
  double det_m;
  bool imaginary_pair;       // det M > 0
  double eigen_magnitude;    // |lambda| at leading order
};

ReducedMatrixModel reduced_matrix(double eps, double m21_2);

/// Dimension-breaking wavenumber estimate ell_eps = |eps| sqrt(-m21_2).
/// Throws DegenerateError when m21_2 >= 0 (no imaginary pair at leading
/// order). eps = 0 returns 0.
double ell_eps_estimate(double eps, double m21_2);

}  // namespace wavetrans
