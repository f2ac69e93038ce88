#include "wavetrans/sampling.hpp"

#include <cmath>

#include "wavetrans/dispersion.hpp"
#include "wavetrans/expansion.hpp"

namespace wavetrans {

namespace {

// Kronecker sequence with golden-ratio increments; deterministic and roughly
// equidistributed in the unit square.
constexpr double kPhi1 = 0.7548776662466927;  // 1/plastic number
constexpr double kPhi2 = 0.5698402909980532;  // its square

double frac(double x) { return x - std::floor(x); }

bool usable(const FluidParams& p, int want_roots) {
  DispersionRootSet rs;
  try {
    rs = positive_roots(p, suggested_k_max(p));
  } catch (const std::exception&) {
    return false;
  }
  if (static_cast<int>(rs.roots.size()) != want_roots) return false;
  for (auto m : rs.multiplicities) {
    if (m != Multiplicity::Simple) return false;
  }
  for (double k : rs.roots) {
    if (k > 14.0) return false;
  }
  if (want_roots == 2 && !nonresonance_check(rs, 1e-6)) return false;
  // Keep a margin from the second-harmonic pole for every family.
  for (double k : rs.roots) {
    const WaveFamily f{k, 1, p};
    if (std::abs(dispersion(2.0 * k, p)) < 1e3 * resonance_threshold(f)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<FluidParams> region1_samples(int n) {
  std::vector<FluidParams> out;
  int i = 0;
  while (static_cast<int>(out.size()) < n && i < 100 * n + 1000) {
    ++i;
    const double u = frac(0.5 + i * kPhi1);
    const double v = frac(0.5 + i * kPhi2);
    const FluidParams p{0.05 + 0.90 * u, 0.02 + 1.48 * v};
    if (usable(p, 1)) out.push_back(p);
  }
  return out;
}

std::vector<FluidParams> region2_samples(int n) {
  std::vector<FluidParams> out;
  int i = 0;
  while (static_cast<int>(out.size()) < n && i < 200 * n + 2000) {
    ++i;
    const double u = frac(0.5 + i * kPhi1);
    const double v = frac(0.5 + i * kPhi2);
    const double alpha = 1.05 + 1.15 * u;
    const double beta_cap = beta_gamma_of_alpha(alpha);
    const FluidParams p{alpha, (0.15 + 0.75 * v) * beta_cap};
    if (usable(p, 2)) out.push_back(p);
  }
  return out;
}

}  // namespace wavetrans
