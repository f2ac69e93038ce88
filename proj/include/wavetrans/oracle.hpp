#pragma once

#include "wavetrans/expansion.hpp"

namespace wavetrans {

// Independent cross-checks for the second-order expansion coefficients.
// These re-derive k2 and m21^(2) from the boundary-value problem at third
// order, without reusing the closed-form expressions under test.

// Right-hand side F3(y) of the third-order interior equation for the
// first-harmonic potential profile, with k2 passed in explicitly.
double solvability_rhs_profile(const WaveFamily& family, double k2, double y);

// Boundary data of the third-order problem, obtained by projecting the
// kinematic and dynamic boundary rows onto the first Fourier mode. Both are
// affine in k2.
double solvability_g3(const WaveFamily& family, double k2);
double solvability_f3(const WaveFamily& family, double k2);

// f3 cosh(k*) + g3 sinh(k*) - int_0^1 F3(y) cosh(k*y) dy, evaluated with
// Gauss-Legendre quadrature.  Vanishes exactly when k2 solves the
// solvability condition.
double solvability_residual(const WaveFamily& family, double k2,
                            int quad_points = 64);

// The residual is affine in k2; solve it from two evaluations.
double k2_from_solvability(const WaveFamily& family, int quad_points = 64);

// Relative residual of the closed-form k2 against the solvability condition.
double solvability_mismatch(const WaveFamily& family, int quad_points = 64);

struct InnerProductLedger {
  double psi_zeta_closed;    // <psi_+, zeta_+*>, closed form
  double psi_zeta_quad;      // same, by quadrature over the strip
  double lhs_chain;          // <L0(zeta_{+,2} - 3 U3), zeta_+*>
  double duk_term;           // <D^2_{Uk} F (U_1, k2), zeta_+*>
  double m21_reconstructed;  // (lhs_chain - 2 duk_term) / psi_zeta
};

InnerProductLedger inner_product_ledger(const WaveFamily& family,
                                        int quad_points = 64);

}  // namespace wavetrans
