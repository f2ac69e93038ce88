#include "wavetrans/stability.hpp"

#include <cmath>
#include <limits>

namespace wavetrans {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sigma_of(const WaveFamily& f) { return std::tanh(f.k_star); }

double t_tilde_of(const WaveFamily& f) {
  return f.params.beta / f.params.alpha * f.k_star * f.k_star;
}

// 1 - sigma^2 = sech^2 k*, computed without cancellation.
double one_minus_sigma2(const WaveFamily& f) {
  const double ch = std::cosh(f.k_star);
  return 1.0 / (ch * ch);
}

double conversion_denominator(const WaveFamily& f) {
  const double k = f.k_star;
  const double sh = std::sinh(k);
  return 4.0 * f.params.beta * k * sh * sh + 2.0 * k + std::sinh(2.0 * k);
}

}  // namespace

const char* sign_class_name(SignClass s) {
  switch (s) {
    case SignClass::Negative: return "negative";
    case SignClass::Positive: return "positive";
    case SignClass::NearZero: return "near_zero";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::TransverselyUnstable: return "TransverselyUnstable";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::ResonantExcluded: return "ResonantExcluded";
  }
  return "?";
}

double m21_via_k2(const WaveFamily& family, double k2) {
  const double k = family.k_star;
  const double sh = std::sinh(k);
  const double common = 4.0 * family.params.beta * k * sh * sh + 2.0 * k;
  const double s2 = std::sinh(2.0 * k);
  return -4.0 * k * (common - s2) / (common + s2) * k2;
}

double m21_tilde_direct(const WaveFamily& family) {
  const double k = family.k_star;
  const auto& p = family.params;
  const double c = c_of_kstar(family);
  const double ab = p.alpha * p.beta;
  return -(9.0 * ab + 16.0) * k + 12.0 * ab * k * std::cosh(2.0 * k) -
         3.0 * ab * k * std::cosh(4.0 * k) +
         8.0 * p.alpha * (2.0 * c - 1.0) * std::sinh(2.0 * k) +
         4.0 * p.alpha * (c + 2.0) * std::sinh(4.0 * k);
}

std::array<double, 4> a_coefficients(double sigma) {
  const double s2 = sigma * sigma;
  const double s4 = s2 * s2;
  const double s6 = s4 * s2;
  return {
      -2.0 * s6 + 13.0 * s4 - 12.0 * s2 + 9.0,   // a0
      -6.0 * s6 + 33.0 * s4 - 62.0 * s2 + 36.0,  // a1
      -6.0 * s6 + 30.0 * s4 - 55.0 * s2 + 33.0,  // a2
      -2.0 * s6 + 10.0 * s4 - 14.0 * s2 + 6.0,   // a3
  };
}

double m21_tilde_sigma(const WaveFamily& family) {
  const double k = family.k_star;
  const double sigma = sigma_of(family);
  const double t = t_tilde_of(family);
  const double u = one_minus_sigma2(family);
  const auto a = a_coefficients(sigma);
  const double poly = ((a[3] * t + a[2]) * t + a[1]) * t + a[0];
  const double pole = sigma * sigma - t * (3.0 - sigma * sigma);
  if (std::abs(pole) < 1e-12 * (1.0 + t)) {
    throw ResonanceError(
        "m21_tilde_sigma: sigma^2 = T~(3 - sigma^2) (second-harmonic "
        "resonance)");
  }
  return 8.0 * k / ((1.0 + t) * (1.0 + t) * u * u) * poly / pole;
}

double chi_davey_stewartson(const WaveFamily& family) {
  const double sigma = sigma_of(family);
  const double s2 = sigma * sigma;
  const double t = t_tilde_of(family);
  const double u = one_minus_sigma2(family);
  const double pole = s2 - t * (3.0 - s2);
  if (std::abs(pole) < 1e-12 * (1.0 + t)) {
    throw ResonanceError("chi_davey_stewartson: on the resonance pole");
  }
  const double bracket = (u * (9.0 - s2) + t * (3.0 - s2) * (7.0 - s2)) / pole +
                         8.0 * s2 - 2.0 * u * u * (1.0 + t) -
                         3.0 * s2 * t / (1.0 + t);
  return bracket / (4.0 * std::sqrt(sigma * (1.0 + t)));
}

double m21_from_tilde(const WaveFamily& family, double m_tilde) {
  const double k = family.k_star;
  return k * k * k * k / (8.0 * family.params.alpha) * m_tilde /
         conversion_denominator(family);
}

double m21_tilde_from_chi(const WaveFamily& family, double chi) {
  const double k = family.k_star;
  const double sigma = sigma_of(family);
  const double t = t_tilde_of(family);
  const double u = one_minus_sigma2(family);
  return 32.0 * k * std::sqrt(sigma * (1.0 + t)) / ((1.0 + t) * u * u) * chi;
}

SignClass sign_via_dispersion(const WaveFamily& family) {
  const double d2k = dispersion(2.0 * family.k_star, family.params);
  if (std::abs(d2k) < resonance_threshold(family)) return SignClass::NearZero;
  return d2k > 0.0 ? SignClass::Negative : SignClass::Positive;
}

StabilityReport stability_report(const WaveFamily& family) {
  StabilityReport r{family,
                    sigma_of(family),
                    t_tilde_of(family),
                    a_coefficients(sigma_of(family)),
                    kNaN,
                    kNaN,
                    kNaN,
                    kNaN,
                    kNaN,
                    kNaN,
                    SignClass::NearZero,
                    Verdict::ResonantExcluded,
                    kNaN,
                    false};

  r.sign = sign_via_dispersion(family);
  if (r.sign == SignClass::NearZero) {
    return r;  // all routes share the D(2k*) pole; nothing to evaluate
  }

  r.k2 = k2_coefficient(family);
  r.m21_from_k2 = m21_via_k2(family, r.k2);
  r.m21_tilde_direct = wavetrans::m21_tilde_direct(family);
  r.m21_2 = r.m21_from_k2;

  if (family.k_star <= kSigmaRouteMaxKstar) {
    r.m21_tilde_sigma = wavetrans::m21_tilde_sigma(family);
    r.chi_ds = chi_davey_stewartson(family);
  } else {
    r.sigma_route_skipped = true;
  }

  r.verdict = (r.sign == SignClass::Negative) ? Verdict::TransverselyUnstable
                                              : Verdict::Inconclusive;
  if (r.sign == SignClass::Negative) {
    r.ell_coeff = std::sqrt(-r.m21_2);
  }
  return r;
}

std::vector<StabilityReport> classify_transverse_stability(
    const FluidParams& params, double tol) {
  const RegionClass rc = classify_region(params, tol);
  if (rc.tag != RegionTag::RegionI && rc.tag != RegionTag::RegionII) {
    throw RegionError(std::string("classify_transverse_stability: parameters "
                                  "classify as ") +
                      region_tag_name(rc.tag));
  }

  std::vector<StabilityReport> reports;
  for (const auto& family : wave_families(params)) {
    StabilityReport r = stability_report(family);
    if (rc.tag == RegionTag::RegionII && rc.resonant) {
      r.verdict = Verdict::ResonantExcluded;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace wavetrans
