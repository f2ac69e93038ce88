#pragma once

#include <vector>

#include "wavetrans/params.hpp"

namespace wavetrans {

enum class Multiplicity { Simple, Double };

/// Positive roots of the linear dispersion relation, ascending.
struct DispersionRootSet {
  std::vector<double> roots;
  std::vector<Multiplicity> multiplicities;
  double tolerance = 0.0;

  int count() const { return static_cast<int>(roots.size()); }
};

enum class RegionTag {
  RegionI,          // alpha in (0,1): one simple positive root
  RegionII,         // alpha > 1, beta < beta_Gamma(alpha): two simple roots
  AlphaOneBoundary, // alpha within tolerance of 1
  OnGamma,          // double root (weak surface tension critical curve)
  OnGammaM,         // resonant curve k2 = m * k1
  NoBifurcation     // alpha > 1, beta above Gamma: no positive roots
};

struct RegionClass {
  RegionTag tag;
  int m = 0;              // set for OnGammaM
  bool resonant = false;  // RegionII only: root ratio near an integer
  double curve_distance = 0.0;  // beta-distance to the nearest critical curve
};

const char* region_tag_name(RegionTag tag);

/// A point on Gamma (double roots of D) or Gamma_m (resonant roots).
struct CurveSample {
  double s;    // curve parameter; the root location (smaller root for Gamma_m)
  int m;       // 0 for Gamma, >= 2 for Gamma_m
  FluidParams params;
};

/// D(k) = (alpha + beta k^2) sinh|k| - |k| cosh(k). Even in k.
double dispersion(double k, const FluidParams& params);

/// dD/dk for k > 0, odd extension for k < 0. At k = 0 returns the one-sided
/// limit alpha - 1 (D has a corner there).
double dispersion_derivative(double k, const FluidParams& params);

/// d^2D/dk^2 for k > 0, even extension.
double dispersion_second_derivative(double k, const FluidParams& params);

/// Sum of the term magnitudes of D (resp. D'). Residual checks on the
/// critical curves divide by these: the two terms of D grow like k cosh k
/// and cancel exactly on a curve, so an absolute tolerance is meaningless
/// at large k.
double dispersion_scale(double k, const FluidParams& params);
double dispersion_derivative_scale(double k, const FluidParams& params);

/// All roots of D in (0, k_max]: uniform 2048-point sign scan, bisection,
/// two Newton polish steps. Double roots detected at critical points of D.
DispersionRootSet positive_roots(const FluidParams& params, double k_max,
                                 double tol = 1e-12);

/// Parametrization of Gamma; s must be >= 1e-4 (limit point is (1, 1/3)).
CurveSample gamma_point(double s);

/// Limit of gamma_point(s) as s -> 0: (alpha, beta) = (1, 1/3).
FluidParams gamma_limit_point();

/// Parametrization of Gamma_m, m >= 2; roots at s and m*s.
CurveSample gamma_m_point(int m, double s);

/// Inverts alpha_Gamma(s) = alpha by bisection and returns beta_Gamma(alpha).
double beta_gamma_of_alpha(double alpha, double tol = 1e-12);

/// Same inversion for Gamma_m; returns NaN if alpha is below the curve start.
double beta_gamma_m_of_alpha(int m, double alpha, double tol = 1e-12);

/// True iff k2/k1 is farther than tol from every integer m >= 2.
/// Requires exactly two simple roots.
bool nonresonance_check(const DispersionRootSet& roots, double tol);

/// Parameter-plane classification per the root cases, with on-curve tags.
RegionClass classify_region(const FluidParams& params, double tol,
                            int m_max = 4);

/// k_max large enough to bracket every positive root at these parameters
/// (the large root grows like 1/beta as beta -> 0).
double suggested_k_max(const FluidParams& params);

}  // namespace wavetrans
