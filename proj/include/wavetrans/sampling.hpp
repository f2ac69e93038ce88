#pragma once

#include <vector>

#include "wavetrans/params.hpp"

namespace wavetrans {

// Deterministic low-discrepancy parameter samples used by the test suites.
// Every returned point has exactly the expected number of simple roots, all
// roots at k* <= 14 (so tanh/sech based formulas stay well conditioned), and
// no second-harmonic resonance.

std::vector<FluidParams> region1_samples(int n);
std::vector<FluidParams> region2_samples(int n);

}  // namespace wavetrans
