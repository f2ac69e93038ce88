#include "wavetrans/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wavetrans {

namespace {

constexpr int kScanPoints = 2048;
constexpr double kSmallSFloor = 1e-4;
constexpr double kDoubleRootFactor = 1e-8;

}  // namespace

const char* region_tag_name(RegionTag tag) {
  switch (tag) {
    case RegionTag::RegionI: return "RegionI";
    case RegionTag::RegionII: return "RegionII";
    case RegionTag::AlphaOneBoundary: return "AlphaOneBoundary";
    case RegionTag::OnGamma: return "OnGamma";
    case RegionTag::OnGammaM: return "OnGammaM";
    case RegionTag::NoBifurcation: return "NoBifurcation";
  }
  return "?";
}

double dispersion(double k, const FluidParams& params) {
  const double ak = std::abs(k);
  return (params.alpha + params.beta * k * k) * std::sinh(ak) -
         ak * std::cosh(k);
}

double dispersion_derivative(double k, const FluidParams& params) {
  const double ak = std::abs(k);
  if (ak == 0.0) return params.alpha - 1.0;
  const double sh = std::sinh(ak);
  const double ch = std::cosh(ak);
  const double v = 2.0 * params.beta * ak * sh +
                   (params.alpha + params.beta * ak * ak) * ch - ch - ak * sh;
  return k < 0.0 ? -v : v;
}

double dispersion_second_derivative(double k, const FluidParams& params) {
  const double ak = std::abs(k);
  const double sh = std::sinh(ak);
  const double ch = std::cosh(ak);
  return 2.0 * params.beta * sh + 4.0 * params.beta * ak * ch +
         (params.alpha + params.beta * ak * ak) * sh - 2.0 * sh - ak * ch;
}

double dispersion_scale(double k, const FluidParams& params) {
  const double ak = std::abs(k);
  return (params.alpha + params.beta * k * k) * std::sinh(ak) +
         ak * std::cosh(ak) + 1.0;
}

double dispersion_derivative_scale(double k, const FluidParams& params) {
  const double ak = std::abs(k);
  const double sh = std::sinh(ak);
  const double ch = std::cosh(ak);
  return 2.0 * params.beta * ak * sh +
         (params.alpha + params.beta * ak * ak) * ch + ch + ak * sh + 1.0;
}

namespace {

// Two Newton steps from an already-bracketed approximation.
double newton_polish(double k, const FluidParams& params) {
  for (int i = 0; i < 2; ++i) {
    const double d = dispersion(k, params);
    const double dd = dispersion_derivative(k, params);
    if (dd == 0.0) break;
    const double next = k - d / dd;
    if (next > 0.0 && std::isfinite(next)) k = next;
  }
  return k;
}

double bisect(double lo, double hi, const FluidParams& params) {
  double flo = dispersion(lo, params);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = dispersion(mid, params);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Critical point of D near k0, by Newton on D'.
double polish_critical(double k0, const FluidParams& params) {
  double k = k0;
  for (int i = 0; i < 50; ++i) {
    const double d1 = dispersion_derivative(k, params);
    const double d2 = dispersion_second_derivative(k, params);
    if (d2 == 0.0) break;
    const double next = k - d1 / d2;
    if (!(next > 0.0) || !std::isfinite(next)) break;
    if (std::abs(next - k) < 1e-15 * (1.0 + std::abs(k))) {
      k = next;
      break;
    }
    k = next;
  }
  return k;
}

bool is_double_root(double k, const FluidParams& params) {
  return std::abs(dispersion_derivative(k, params)) <
         kDoubleRootFactor *
             (1.0 + std::abs(dispersion_second_derivative(k, params)));
}

}  // namespace

double suggested_k_max(const FluidParams& params) {
  // The large root satisfies alpha + beta k^2 ~ k, i.e. k ~ 1/beta.
  return std::max(20.0, 2.0 / params.beta + 10.0);
}

DispersionRootSet positive_roots(const FluidParams& params, double k_max,
                                 double tol) {
  if (!(k_max > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("positive_roots: k_max and tol must be > 0");
  }
  const double h = k_max / kScanPoints;

  std::vector<double> grid_k(kScanPoints + 1);
  std::vector<double> grid_d(kScanPoints + 1);
  for (int i = 0; i <= kScanPoints; ++i) {
    grid_k[i] = (i == 0) ? 0.25 * h : i * h;  // skip the trivial root at 0
    grid_d[i] = dispersion(grid_k[i], params);
  }

  std::vector<double> roots;
  for (int i = 0; i < kScanPoints; ++i) {
    if ((grid_d[i] <= 0.0) != (grid_d[i + 1] <= 0.0)) {
      roots.push_back(
          newton_polish(bisect(grid_k[i], grid_k[i + 1], params), params));
    }
  }

  // Critical points of D: either a double root (on Gamma) or a pair of
  // simple roots hiding inside one scan cell.
  std::vector<double> dprime(kScanPoints + 1);
  for (int i = 0; i <= kScanPoints; ++i) {
    dprime[i] = dispersion_derivative(grid_k[i], params);
  }
  for (int i = 0; i < kScanPoints; ++i) {
    if ((dprime[i] <= 0.0) == (dprime[i + 1] <= 0.0)) continue;
    const double kc = polish_critical(0.5 * (grid_k[i] + grid_k[i + 1]), params);
    if (!(kc > 0.0) || kc > k_max) continue;
    const double dc = dispersion(kc, params);
    const double scale =
        1.0 + std::abs(dispersion_second_derivative(kc, params));
    const bool seen = std::any_of(roots.begin(), roots.end(), [&](double r) {
      return std::abs(r - kc) < 2.0 * h;
    });
    if (std::abs(dc) < tol * scale) {
      if (!seen) roots.push_back(kc);
    } else if (!seen) {
      // Opposite sign to the neighbors means two crossings inside the cell.
      const double dl = dispersion(grid_k[i], params);
      const double dr = dispersion(grid_k[i + 1], params);
      if ((dc <= 0.0) != (dl <= 0.0) && (dc <= 0.0) != (dr <= 0.0)) {
        roots.push_back(newton_polish(bisect(grid_k[i], kc, params), params));
        roots.push_back(newton_polish(bisect(kc, grid_k[i + 1], params), params));
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  DispersionRootSet out;
  out.tolerance = tol;
  for (double r : roots) {
    if (!out.roots.empty() && std::abs(r - out.roots.back()) < 0.5 * h) continue;
    out.roots.push_back(r);
    out.multiplicities.push_back(is_double_root(r, params)
                                     ? Multiplicity::Double
                                     : Multiplicity::Simple);
  }
  return out;
}

CurveSample gamma_point(double s) {
  if (!(s >= kSmallSFloor)) {
    throw std::invalid_argument(
        "gamma_point: s below 1e-4; use gamma_limit_point() for s -> 0");
  }
  const double sh = std::sinh(s);
  const double th = std::tanh(s);
  const double alpha = s * s / (2.0 * sh * sh) + s / (2.0 * th);
  const double beta = -1.0 / (2.0 * sh * sh) + 1.0 / (2.0 * s * th);
  return CurveSample{s, 0, FluidParams(alpha, beta)};
}

FluidParams gamma_limit_point() { return FluidParams(1.0, 1.0 / 3.0); }

CurveSample gamma_m_point(int m, double s) {
  if (m < 2) throw std::invalid_argument("gamma_m_point: m must be >= 2");
  if (!(s >= kSmallSFloor)) {
    throw std::invalid_argument("gamma_m_point: s below 1e-4");
  }
  const double dm = static_cast<double>(m);
  const double denom = 1.0 - dm * dm;
  const double ths = std::tanh(s);
  const double thms = std::tanh(dm * s);
  const double alpha = -dm * dm * s / (denom * ths) + dm * s / (denom * thms);
  const double beta =
      1.0 / (denom * s * ths) - dm / (denom * s * thms);
  return CurveSample{s, m, FluidParams(alpha, beta)};
}

namespace {

double gamma_alpha_of_s(double s) {
  const double sh = std::sinh(s);
  return s * s / (2.0 * sh * sh) + s / (2.0 * std::tanh(s));
}

double gamma_m_alpha_of_s(int m, double s) {
  const double dm = static_cast<double>(m);
  const double denom = 1.0 - dm * dm;
  return -dm * dm * s / (denom * std::tanh(s)) +
         dm * s / (denom * std::tanh(dm * s));
}

// Bisection for alpha_curve(s) = alpha; alpha_curve is increasing in s.
template <typename AlphaFn>
double invert_alpha(AlphaFn alpha_of_s, double alpha, double tol) {
  double lo = kSmallSFloor;
  double hi = std::max(4.0, 3.0 * alpha);
  if (alpha_of_s(lo) > alpha) throw BracketError("invert_alpha: alpha below curve range");
  int guard = 0;
  while (alpha_of_s(hi) < alpha) {
    hi *= 2.0;
    if (++guard > 60) throw BracketError("invert_alpha: no upper bracket");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (alpha_of_s(mid) < alpha) lo = mid; else hi = mid;
    if (hi - lo < tol * 1e-3 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double beta_gamma_of_alpha(double alpha, double tol) {
  if (!(alpha > 1.0)) {
    throw std::invalid_argument("beta_gamma_of_alpha: requires alpha > 1");
  }
  const double s = invert_alpha(gamma_alpha_of_s, alpha, tol);
  return gamma_point(s).params.beta;
}

double beta_gamma_m_of_alpha(int m, double alpha, double tol) {
  if (m < 2) throw std::invalid_argument("beta_gamma_m_of_alpha: m >= 2");
  if (!(alpha > 1.0)) return std::nan("");
  try {
    const double s =
        invert_alpha([m](double s) { return gamma_m_alpha_of_s(m, s); }, alpha, tol);
    return gamma_m_point(m, s).params.beta;
  } catch (const BracketError&) {
    return std::nan("");
  }
}

bool nonresonance_check(const DispersionRootSet& roots, double tol) {
  if (roots.count() != 2 ||
      roots.multiplicities[0] != Multiplicity::Simple ||
      roots.multiplicities[1] != Multiplicity::Simple) {
    throw std::logic_error(
        "nonresonance_check: requires exactly two simple roots");
  }
  const double ratio = roots.roots[1] / roots.roots[0];
  const double nearest = std::max(2.0, std::round(ratio));
  return std::abs(ratio - nearest) > tol;
}

RegionClass classify_region(const FluidParams& params, double tol, int m_max) {
  RegionClass rc{RegionTag::RegionI, 0, false,
                 std::numeric_limits<double>::infinity()};

  if (std::abs(params.alpha - 1.0) < tol) {
    rc.tag = RegionTag::AlphaOneBoundary;
    rc.curve_distance = std::abs(params.alpha - 1.0);
    return rc;
  }

  if (params.alpha < 1.0) {
    rc.tag = RegionTag::RegionI;
    return rc;
  }

  // alpha > 1: curve proximity measured as beta-distance at fixed alpha.
  const double bg = beta_gamma_of_alpha(params.alpha, 1e-12);
  rc.curve_distance = std::abs(params.beta - bg);
  if (rc.curve_distance < tol) {
    rc.tag = RegionTag::OnGamma;
    return rc;
  }
  for (int m = 2; m <= m_max; ++m) {
    const double bm = beta_gamma_m_of_alpha(m, params.alpha, 1e-12);
    if (std::isnan(bm)) continue;
    const double dist = std::abs(params.beta - bm);
    rc.curve_distance = std::min(rc.curve_distance, dist);
    if (dist < tol) {
      rc.tag = RegionTag::OnGammaM;
      rc.m = m;
      return rc;
    }
  }

  if (params.beta > bg) {
    rc.tag = RegionTag::NoBifurcation;
    return rc;
  }

  rc.tag = RegionTag::RegionII;
  const auto roots = positive_roots(params, suggested_k_max(params), 1e-12);
  if (roots.count() == 2) {
    rc.resonant = !nonresonance_check(roots, tol);
  }
  return rc;
}

}  // namespace wavetrans
