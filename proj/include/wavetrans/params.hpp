#pragma once

#include <stdexcept>
#include <string>

namespace wavetrans {

/// Dimensionless fluid parameters: alpha is the inverse square of the Froude
/// number, beta the Weber number. Both must be strictly positive.
struct FluidParams {
  double alpha;
  double beta;

  FluidParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
      throw std::invalid_argument(
          "FluidParams: alpha and beta must be positive, got alpha=" +
          std::to_string(alpha_) + " beta=" + std::to_string(beta_));
    }
  }
};

/// Second-harmonic resonance: a formula with a pole at D(2k*) = 0 was asked
/// to evaluate too close to the pole.
struct ResonanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A denominator that the formulas require to be nonzero is below threshold.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Root/curve searches that fail to bracket.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation invoked for parameters outside its admissible region.
struct RegionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wavetrans
