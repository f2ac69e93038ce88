#pragma once

#include <array>
#include <vector>

#include "wavetrans/expansion.hpp"
#include "wavetrans/params.hpp"

namespace wavetrans {

enum class SignClass { Negative, Positive, NearZero };
enum class Verdict { TransverselyUnstable, Inconclusive, ResonantExcluded };

const char* sign_class_name(SignClass s);
const char* verdict_name(Verdict v);

/// m21^(2) from the wavenumber correction k2 (the canonical route):
/// -4 k* (4 beta k* sinh^2 k* + 2k* - sinh 2k*)
///       / (4 beta k* sinh^2 k* + 2k* + sinh 2k*) * k2.
double m21_via_k2(const WaveFamily& family, double k2);

/// The hyperbolic closed form of m~21^(2) in k*, alpha, beta, c(k*).
double m21_tilde_direct(const WaveFamily& family);

/// m~21^(2) in the (sigma, T~) variables, sigma = tanh k*, T~ = beta k*^2 / alpha.
double m21_tilde_sigma(const WaveFamily& family);

/// (a0, a1, a2, a3) polynomials of the sigma-form numerator.
std::array<double, 4> a_coefficients(double sigma);

/// The Davey-Stewartson cubic coefficient chi(sigma, T~), unit depth.
double chi_davey_stewartson(const WaveFamily& family);

/// Scale conversion m~21^(2) -> m21^(2):
/// k*^4 / (8 alpha) * m~ / (4 beta k* sinh^2 k* + 2k* + sinh 2k*).
double m21_from_tilde(const WaveFamily& family, double m_tilde);

/// Reconstruction m~21^(2) = 32 k* sqrt(sigma (1+T~)) / ((1+T~)(1-sigma^2)^2) chi.
double m21_tilde_from_chi(const WaveFamily& family, double chi);

/// sign(m21^(2)) = -sign(D(2k*)), NearZero inside the resonance threshold.
SignClass sign_via_dispersion(const WaveFamily& family);

/// Above this k* the sigma/T~ forms lose precision ((1-sigma^2)^-2 blowup);
/// those routes are skipped and reported as NaN.
constexpr double kSigmaRouteMaxKstar = 15.0;

struct StabilityReport {
  WaveFamily family;
  double sigma;
  double t_tilde;
  std::array<double, 4> a_coeffs;
  double k2;
  double m21_from_k2;       // canonical route, already on the m21 scale
  double m21_tilde_direct;  // raw m~ value
  double m21_tilde_sigma;   // raw m~ value; NaN when the route is skipped
  double chi_ds;            // NaN when skipped
  double m21_2;             // canonical value (= m21_from_k2)
  SignClass sign;
  Verdict verdict;
  double ell_coeff;  // sqrt(-m21_2) when negative, else NaN
  bool sigma_route_skipped;
};

/// Full report for one family. Routes with poles at D(2k*) = 0 are left NaN
/// (verdict ResonantExcluded) instead of propagating the exception.
StabilityReport stability_report(const WaveFamily& family);

/// One report per bifurcating family. Throws RegionError unless the
/// parameters classify to Region I or nonresonant Region II; resonant
/// Region II points yield reports with verdict ResonantExcluded.
std::vector<StabilityReport> classify_transverse_stability(
    const FluidParams& params, double tol);

}  // namespace wavetrans
