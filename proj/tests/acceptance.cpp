// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Takes the CLI binary path as the last argument (used by the determinism
// criterion); the other criteria exercise the library directly.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wavetrans/dispersion.hpp"
#include "wavetrans/expansion.hpp"
#include "wavetrans/linop.hpp"
#include "wavetrans/oracle.hpp"
#include "wavetrans/sampling.hpp"
#include "wavetrans/stability.hpp"

using namespace wavetrans;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", idx, name,
              pass ? "PASS" : "FAIL", detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::vector<WaveFamily> sample_families() {
  static std::vector<WaveFamily> fams = [] {
    std::vector<WaveFamily> out;
    for (const auto& p : region1_samples(40))
      for (const auto& f : wave_families(p)) out.push_back(f);
    for (const auto& p : region2_samples(30))
      for (const auto& f : wave_families(p)) out.push_back(f);
    return out;
  }();
  return fams;
}

// --------------------------------------------------------------- criteria

void criterion1_curves() {
  // the two terms of D cancel exactly on a curve and grow like k cosh k, so
  // the identities are checked relative to the term size
  const auto rel = [](double k, const FluidParams& p) {
    return std::abs(dispersion(k, p)) / dispersion_scale(k, p);
  };
  const auto rel_d = [](double k, const FluidParams& p) {
    return std::abs(dispersion_derivative(k, p)) /
           dispersion_derivative_scale(k, p);
  };
  double worst = 0.0;
  for (double s : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    const auto g = gamma_point(s);
    worst = std::max({worst, rel(s, g.params), rel_d(s, g.params)});
    for (int m : {2, 3, 4}) {
      const auto gm = gamma_m_point(m, s);
      worst = std::max({worst, rel(s, gm.params), rel(m * s, gm.params)});
    }
  }
  const auto lim = gamma_point(1e-3).params;
  const double lim_err = std::max(std::abs(lim.alpha - 1.0),
                                  std::abs(lim.beta - 1.0 / 3.0));
  report(1, "curve identities", worst < 1e-10 && lim_err < 1e-6,
         "worst identity " + num(worst) + ", limit point error " +
             num(lim_err));
}

void criterion2_root_region_grid() {
  int mismatches = 0, tested = 0;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double beta = 1.5 * (j + 0.5) / 50.0;
      const double alpha = 2.5 * (i + 0.5) / 50.0;
      const FluidParams p{alpha, beta};
      const auto rc = classify_region(p, 1e-9);
      int expected = -1;
      if (rc.tag == RegionTag::RegionI) expected = 1;
      if (rc.tag == RegionTag::RegionII) expected = 2;
      if (rc.tag == RegionTag::NoBifurcation) expected = 0;
      if (expected < 0) continue;  // on a curve or the alpha = 1 boundary
      ++tested;
      if (positive_roots(p, suggested_k_max(p)).count() != expected)
        ++mismatches;
    }
  }
  report(2, "root/region consistency", mismatches == 0 && tested > 2000,
         std::to_string(tested) + " cells, " + std::to_string(mismatches) +
             " mismatches");
}

void criterion3_four_routes() {
  const auto fams = sample_families();
  double worst = 0.0;
  for (const auto& fam : fams) {
    const double a = m21_via_k2(fam, k2_coefficient(fam));
    const double routes[3] = {
        m21_from_tilde(fam, m21_tilde_direct(fam)),
        m21_from_tilde(fam, m21_tilde_sigma(fam)),
        m21_from_tilde(fam,
                       m21_tilde_from_chi(fam, chi_davey_stewartson(fam)))};
    const double all[4] = {a, routes[0], routes[1], routes[2]};
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        worst = std::max(worst, std::abs(all[i] - all[j]) / std::abs(a));
      }
    }
  }
  report(3, "four-route agreement",
         fams.size() >= 100 && worst < 1e-8,
         std::to_string(fams.size()) + " samples, worst pairwise rel " +
             num(worst));
}

void criterion4_sign_theorem() {
  bool ok = true;
  std::string why;
  for (const auto& fam : sample_families()) {
    const double m21 = m21_via_k2(fam, k2_coefficient(fam));
    if (m21 * dispersion(2.0 * fam.k_star, fam.params) >= 0.0) {
      ok = false;
      why = "sign identity violated";
    }
    if (fam.params.alpha < 1.0 && m21 >= 0.0) {
      ok = false;
      why = "Region I sample with nonnegative m21";
    }
    if (fam.family_index == 2 && m21 >= 0.0) {
      ok = false;
      why = "family 2 sample with nonnegative m21";
    }
    if (fam.family_index == 1 && fam.params.alpha > 1.0) {
      const auto fams = wave_families(fam.params);
      const bool between = 2.0 * fams[0].k_star > fams[1].k_star;
      if ((m21 < 0.0) != between) {
        ok = false;
        why = "family 1 sign does not match the Gamma_2 split";
      }
    }
  }

  // the family-1 verdict must flip within one grid cell of Gamma_2
  double worst_cells = 0.0;
  for (double alpha : {1.3, 1.6, 2.0}) {
    const double b_lo = 0.02, b_hi = 0.95 * beta_gamma_of_alpha(alpha);
    const int n = 400;
    const double h = (b_hi - b_lo) / n;
    double flip_beta = -1.0;
    double prev = 0.0;
    bool have_prev = false;
    for (int j = 0; j <= n; ++j) {
      const FluidParams p{alpha, b_lo + j * h};
      const auto fams = wave_families(p);
      if (fams.size() != 2) continue;
      double m21;
      try {
        m21 = m21_via_k2(fams[0], k2_coefficient(fams[0]));
      } catch (const ResonanceError&) {
        continue;  // the pole itself sits on Gamma_2
      }
      if (have_prev && prev * m21 < 0.0) flip_beta = p.beta - 0.5 * h;
      prev = m21;
      have_prev = true;
    }
    const double curve_beta = beta_gamma_m_of_alpha(2, alpha);
    if (flip_beta < 0.0 || !std::isfinite(curve_beta)) {
      ok = false;
      why = "no verdict flip found along beta at alpha=" + num(alpha);
      continue;
    }
    worst_cells = std::max(worst_cells, std::abs(flip_beta - curve_beta) / h);
  }
  if (worst_cells > 1.0) {
    ok = false;
    why = "flip misses Gamma_2 by " + num(worst_cells) + " cells";
  }
  report(4, "sign theorem", ok,
         ok ? "flip within " + num(worst_cells) + " cells of Gamma_2" : why);
}

void criterion5_solvability() {
  double worst_res = 0.0, worst_k2 = 0.0;
  for (const auto& fam : sample_families()) {
    const double k2 = k2_coefficient(fam);
    // scale the residual by the size of its constituent terms
    const double f3 = solvability_f3(fam, k2) * std::cosh(fam.k_star);
    const double g3 = solvability_g3(fam, k2) * std::sinh(fam.k_star);
    const double scale = std::abs(f3) + std::abs(g3) + 1.0;
    worst_res = std::max(worst_res,
                         std::abs(solvability_residual(fam, k2)) / scale);
    const double k2s = k2_from_solvability(fam);
    worst_k2 = std::max(worst_k2, std::abs(k2 - k2s) / (1.0 + std::abs(k2s)));
  }
  report(5, "solvability oracle", worst_res < 1e-10 && worst_k2 < 1e-9,
         "residual " + num(worst_res) + ", k2 mismatch " + num(worst_k2));
}

void criterion6_ledger() {
  double worst_q = 0.0, worst_m = 0.0;
  for (const auto& fam : sample_families()) {
    const auto led = inner_product_ledger(fam);
    worst_q = std::max(worst_q,
                       std::abs(led.psi_zeta_quad - led.psi_zeta_closed) /
                           std::abs(led.psi_zeta_closed));
    const double m21 = m21_via_k2(fam, k2_coefficient(fam));
    worst_m = std::max(worst_m,
                       std::abs(led.m21_reconstructed - m21) / std::abs(m21));
  }
  report(6, "inner-product ledger", worst_q < 1e-12 && worst_m < 1e-10,
         "quadrature " + num(worst_q) + ", m21 " + num(worst_m));
}

void criterion7_operator() {
  const auto fams = sample_families();
  double worst = 0.0;
  int used = 0;
  for (const auto& fam : fams) {
    if (used >= 20) break;
    ++used;
    worst = std::max(
        worst, jordan_chain_residuals(fam.k_star, fam.params, 64, 32).max());
  }
  // the no-zero property holds for all families except the smaller-root
  // one when 2 k1 < k2, where zeros of the determinant are structural
  bool scan_ok = true;
  int scanned = 0;
  for (const auto& fam : fams) {
    if (!transverse_scan_expected_clean(fam.k_star, fam.params)) continue;
    ++scanned;
    if (!transverse_spectrum_scan(fam.k_star, fam.params, 5, 10.0, 400)
             .empty()) {
      scan_ok = false;
    }
  }
  report(7, "operator structure", worst < 1e-10 && scan_ok,
         "worst Jordan residual " + num(worst) + ", scan " +
             (scan_ok ? "clean" : "found a zero") + " on " +
             std::to_string(scanned) + " families");
}

void criterion8_residuals() {
  double worst = 0.0;
  bool sym_ok = true;
  for (const auto& fam : sample_families()) {
    const auto exp = make_expansion(fam);
    worst = std::max({worst, residual_order1(exp, 48, 24).max(),
                      residual_order2(exp, 48, 24).max()});
    const double eps = 0.1;
    for (double x : {0.2, 1.1, 2.7}) {
      if (exp.surface(x, eps) != exp.surface(-x, eps)) sym_ok = false;
      if (exp.potential(x, 0.5, eps) != -exp.potential(-x, 0.5, eps))
        sym_ok = false;
      const double a = exp.surface(x, eps);
      const double b = exp.surface(x + M_PI, -eps);
      // cos(x + pi) rounds, so "machine exact" here means a few ulp
      if (std::abs(a - b) > 1e-13 * (1.0 + std::abs(a))) sym_ok = false;
    }
  }
  report(8, "expansion residuals", worst < 1e-10 && sym_ok,
         "worst residual " + num(worst) +
             (sym_ok ? ", symmetries exact" : ", symmetry violated"));
}

std::string capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion9_determinism(const std::string& cli) {
  const std::string v1 = capture(cli + " verify --json 2>/dev/null");
  const std::string v2 = capture(cli + " verify --json 2>/dev/null");
  const bool verify_ok = !v1.empty() && v1 == v2;

  const std::string flags =
      " map --alpha-min 0.3 --alpha-max 2.2 --beta-min 0.1 --beta-max 1.2 "
      "--grid-nx 8 --grid-ny 8 --out ";
  const int rc_a =
      std::system((cli + flags + "/tmp/acc_map_a.csv 2>/dev/null").c_str());
  const int rc_b =
      std::system((cli + flags + "/tmp/acc_map_b.csv 2>/dev/null").c_str());
  const std::string ma = slurp("/tmp/acc_map_a.csv");
  const bool map_ok = rc_a == 0 && rc_b == 0 && !ma.empty() &&
                      ma == slurp("/tmp/acc_map_b.csv");

  report(9, "determinism", verify_ok && map_ok,
         std::string(verify_ok ? "verify byte-identical" : "verify differs") +
             ", " + (map_ok ? "map byte-identical" : "map differs"));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <cli-binary>\n");
    return 2;
  }
  criterion1_curves();
  criterion2_root_region_grid();
  criterion3_four_routes();
  criterion4_sign_theorem();
  criterion5_solvability();
  criterion6_ledger();
  criterion7_operator();
  criterion8_residuals();
  criterion9_determinism(argv[argc - 1]);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
