#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wavetrans/dispersion.hpp"
#include "wavetrans/expansion.hpp"
#include "wavetrans/linop.hpp"
#include "wavetrans/oracle.hpp"
#include "wavetrans/sampling.hpp"
#include "wavetrans/stability.hpp"

using json = nlohmann::ordered_json;
using namespace wavetrans;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string timestamp_utc() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json envelope(const std::string& command, bool with_timestamp = true) {
  json e;
  e["tool"] = "wavetrans";
  e["version"] = kVersion;
  e["command"] = command;
  if (with_timestamp) e["timestamp"] = timestamp_utc();
  return e;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // LF line endings everywhere
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

json roots_block(const FluidParams& p, double kmax, double tol) {
  const auto rs = positive_roots(p, kmax > 0 ? kmax : suggested_k_max(p), tol);
  const auto rc = classify_region(p, tol);
  json j;
  j["region"] = region_tag_name(rc.tag);
  if (rc.tag == RegionTag::OnGammaM) j["resonance_order"] = rc.m;
  if (rc.tag == RegionTag::RegionII) j["resonant"] = rc.resonant;
  j["root_count"] = rs.count();
  json arr = json::array();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    arr.push_back({{"k", rs.roots[i]},
                   {"multiplicity", rs.multiplicities[i] == Multiplicity::Simple
                                        ? "simple"
                                        : "double"}});
  }
  j["roots"] = std::move(arr);
  return j;
}

json stability_block(const StabilityReport& r) {
  json j;
  j["family"] = r.family.family_index;
  j["k_star"] = r.family.k_star;
  j["sigma"] = r.sigma;
  j["t_tilde"] = r.t_tilde;
  j["k2"] = r.k2;
  j["m21_2"] = r.m21_2;
  j["sign"] = sign_class_name(r.sign);
  j["verdict"] = verdict_name(r.verdict);
  if (std::isfinite(r.ell_coeff)) j["ell_coefficient"] = r.ell_coeff;
  j["sigma_route_skipped"] = r.sigma_route_skipped;

  if (r.sign != SignClass::NearZero) {
    const double via_k2 = r.m21_from_k2;
    const double via_direct = m21_from_tilde(r.family, r.m21_tilde_direct);
    json routes;
    routes["via_k2"] = via_k2;
    routes["via_tilde_direct"] = via_direct;
    double via_sigma = std::numeric_limits<double>::quiet_NaN();
    double via_chi = std::numeric_limits<double>::quiet_NaN();
    if (!r.sigma_route_skipped) {
      via_sigma = m21_from_tilde(r.family, r.m21_tilde_sigma);
      via_chi =
          m21_from_tilde(r.family, m21_tilde_from_chi(r.family, r.chi_ds));
      routes["via_tilde_sigma"] = via_sigma;
      routes["via_chi"] = via_chi;
    }
    const double scale = std::abs(via_k2);
    json diffs;
    diffs["k2_vs_direct"] = std::abs(via_k2 - via_direct) / scale;
    if (!r.sigma_route_skipped) {
      diffs["k2_vs_sigma"] = std::abs(via_k2 - via_sigma) / scale;
      diffs["k2_vs_chi"] = std::abs(via_k2 - via_chi) / scale;
      diffs["direct_vs_sigma"] = std::abs(via_direct - via_sigma) / scale;
      diffs["direct_vs_chi"] = std::abs(via_direct - via_chi) / scale;
      diffs["sigma_vs_chi"] = std::abs(via_sigma - via_chi) / scale;
    }
    j["routes"] = std::move(routes);
    j["pairwise_rel_diff"] = std::move(diffs);
  }
  return j;
}

// ---------------------------------------------------------------- commands

int cmd_roots(double alpha, double beta, double kmax, double tol, bool) {
  const FluidParams p{alpha, beta};
  json e = envelope("roots");
  e["inputs"] = {{"alpha", alpha}, {"beta", beta}, {"kmax", kmax}, {"tol", tol}};
  e.update(roots_block(p, kmax, tol));
  std::cout << e.dump(2) << "\n";
  return 0;
}

int cmd_gamma(int m_max, double s_min, double s_max, int count,
              const std::string& out) {
  if (count < 2 || s_min <= 0 || s_max <= s_min) {
    std::cerr << "gamma: need count >= 2 and 0 < smin < smax\n";
    return 2;
  }
  auto f = open_out(out);
  f << "curve,m,s,beta,alpha\n";
  const double ds = (s_max - s_min) / (count - 1);
  for (int i = 0; i < count; ++i) {
    const double s = s_min + i * ds;
    const CurveSample cs = gamma_point(s);
    // rows are re-validated against the defining identities before writing
    if (std::abs(dispersion(s, cs.params)) >
            1e-10 * dispersion_scale(s, cs.params) ||
        std::abs(dispersion_derivative(s, cs.params)) >
            1e-10 * dispersion_derivative_scale(s, cs.params)) {
      std::cerr << "gamma: self-check failed at s=" << s << "\n";
      return 1;
    }
    f << "gamma,0," << fmt17(s) << "," << fmt17(cs.params.beta) << ","
      << fmt17(cs.params.alpha) << "\n";
  }
  for (int m = 2; m <= m_max; ++m) {
    for (int i = 0; i < count; ++i) {
      const double s = s_min + i * ds;
      const CurveSample cs = gamma_m_point(m, s);
      if (std::abs(dispersion(s, cs.params)) >
              1e-10 * dispersion_scale(s, cs.params) ||
          std::abs(dispersion(m * s, cs.params)) >
              1e-10 * dispersion_scale(m * s, cs.params)) {
        std::cerr << "gamma: self-check failed on gamma_" << m << " at s=" << s
                  << "\n";
        return 1;
      }
      f << "gamma" << m << "," << m << "," << fmt17(s) << ","
        << fmt17(cs.params.beta) << "," << fmt17(cs.params.alpha) << "\n";
    }
  }
  return 0;
}

int cmd_wave(double alpha, double beta, int family, double eps, int nx,
             const std::string& out, double tol) {
  const FluidParams p{alpha, beta};
  const auto families = wave_families(p, tol);
  if (family < 1 || family > static_cast<int>(families.size())) {
    std::cerr << "wave: family " << family << " not available ("
              << families.size() << " families at these parameters)\n";
    return 2;
  }
  const WaveExpansion exp = make_expansion(families[family - 1]);
  const double k_eps = exp.k_epsilon(eps);

  if (!out.empty()) {
    auto f = open_out(out);
    f << "x,X,eta\n";
    for (double x : uniform_grid(0.0, 2.0 * M_PI, nx)) {
      f << fmt17(x) << "," << fmt17(k_eps * x) << ","
        << fmt17(exp.surface(x, eps)) << "\n";
    }
  }

  // symmetry self-checks on a coarse grid
  bool even_ok = true, shift_ok = true;
  for (double x : uniform_grid(0.0, M_PI, 17)) {
    if (exp.surface(x, eps) != exp.surface(-x, eps)) even_ok = false;
    const double a = exp.surface(x, eps);
    const double b = exp.surface(x + M_PI, -eps);
    if (std::abs(a - b) > 1e-13 * (1.0 + std::abs(a))) shift_ok = false;
  }

  json e = envelope("wave");
  e["inputs"] = {{"alpha", alpha}, {"beta", beta}, {"family", family},
                 {"eps", eps}};
  e["k_star"] = exp.family.k_star;
  e["k_eps"] = k_eps;
  e["c"] = exp.c_k;
  e["d"] = exp.d_k;
  e["k2"] = exp.k2;
  e["eta1_amplitude"] = exp.eta1_amp();
  e["eta2_amplitude"] = exp.eta2_amp();
  e["eta2_mean"] = exp.eta2_mean();
  e["validity_radius"] = exp.validity_radius;
  e["symmetry"] = {{"eta_even", even_ok}, {"eps_sign_shift", shift_ok}};
  std::cout << e.dump(2) << "\n";
  return 0;
}

int cmd_stability(double alpha, double beta, double tol) {
  const FluidParams p{alpha, beta};
  json e = envelope("stability");
  e["inputs"] = {{"alpha", alpha}, {"beta", beta}, {"tol", tol}};
  try {
    const auto reports = classify_transverse_stability(p, tol);
    const auto rc = classify_region(p, tol);
    e["region"] = region_tag_name(rc.tag);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(stability_block(r));
    e["families"] = std::move(arr);
  } catch (const RegionError& err) {
    const auto rc = classify_region(p, tol);
    e["region"] = region_tag_name(rc.tag);
    if (rc.tag == RegionTag::OnGammaM) e["resonance_order"] = rc.m;
    e["warning"] = err.what();
  }
  std::cout << e.dump(2) << "\n";
  return 0;
}

int cmd_map(double a_min, double a_max, int ny, double b_min, double b_max,
            int nx, double tol, const std::string& out) {
  if (nx < 2 || ny < 2 || a_min <= 0 || b_min <= 0 || a_max <= a_min ||
      b_max <= b_min) {
    std::cerr << "map: ranges must be positive and ordered, counts >= 2\n";
    return 2;
  }
  auto f = open_out(out);
  f << "alpha,beta,region,root_count,verdict1,m21_1,verdict2,m21_2\n";
  for (int i = 0; i < ny; ++i) {
    const double alpha = a_min + (a_max - a_min) * i / (ny - 1);
    for (int j = 0; j < nx; ++j) {
      const double beta = b_min + (b_max - b_min) * j / (nx - 1);
      const FluidParams p{alpha, beta};
      const auto rc = classify_region(p, tol);
      const auto rs = positive_roots(p, suggested_k_max(p), tol);

      // re-validate the row: root count must match the region tag
      int expected = -1;
      if (rc.tag == RegionTag::RegionI) expected = 1;
      if (rc.tag == RegionTag::RegionII) expected = 2;
      if (rc.tag == RegionTag::NoBifurcation) expected = 0;
      if (expected >= 0 && rs.count() != expected) {
        std::cerr << "map: root/region mismatch at alpha=" << alpha
                  << " beta=" << beta << "\n";
        return 1;
      }

      std::string v1 = "-", m1 = "nan", v2 = "-", m2 = "nan";
      if (rc.tag == RegionTag::RegionI ||
          (rc.tag == RegionTag::RegionII && !rc.resonant)) {
        try {
          const auto reports = classify_transverse_stability(p, tol);
          if (!reports.empty()) {
            v1 = verdict_name(reports[0].verdict);
            m1 = fmt17(reports[0].m21_2);
          }
          if (reports.size() > 1) {
            v2 = verdict_name(reports[1].verdict);
            m2 = fmt17(reports[1].m21_2);
          }
        } catch (const std::exception&) {
          v1 = "error";
        }
      } else if (rc.tag == RegionTag::RegionII) {
        v1 = v2 = "ResonantExcluded";
      }
      f << fmt17(alpha) << "," << fmt17(beta) << "," << region_tag_name(rc.tag)
        << "," << rs.count() << "," << v1 << "," << m1 << "," << v2 << ","
        << m2 << "\n";
    }
  }
  return 0;
}

int cmd_surface(double alpha, double beta, int family, double eps,
                double delta, double ell, int nx, int nz,
                const std::string& out, double tol) {
  const FluidParams p{alpha, beta};
  const auto families = wave_families(p, tol);
  if (family < 1 || family > static_cast<int>(families.size())) {
    std::cerr << "surface: family " << family << " not available\n";
    return 2;
  }
  const WaveExpansion exp = make_expansion(families[family - 1]);
  const StabilityReport rep = stability_report(families[family - 1]);
  if (!(rep.m21_2 < 0.0)) {
    std::cerr << "surface: no dimension-breaking pair at leading order "
                 "(m21_2 = "
              << rep.m21_2 << " >= 0)\n";
    return 1;
  }
  if (ell <= 0.0) ell = ell_eps_estimate(eps, rep.m21_2);
  const double z_extent =
      ell > 0.0 ? 2.0 * M_PI / ell : 1.0;  // one transverse period

  auto f = open_out(out);
  f << "# k_star=" << fmt17(exp.family.k_star)
    << " k_eps=" << fmt17(exp.k_epsilon(eps)) << " ell=" << fmt17(ell)
    << " eps=" << fmt17(eps) << " delta=" << fmt17(delta) << "\n";
  f << "x,z,eta\n";
  const auto grid = doubly_periodic_surface(exp, eps, delta, ell,
                                            uniform_grid(0.0, 2.0 * M_PI, nx),
                                            uniform_grid(0.0, z_extent, nz));
  for (std::size_t i = 0; i < grid.x_nodes.size(); ++i) {
    for (std::size_t j = 0; j < grid.z_nodes.size(); ++j) {
      f << fmt17(grid.x_nodes[i]) << "," << fmt17(grid.z_nodes[j]) << ","
        << fmt17(grid.values[i * grid.z_nodes.size() + j]) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ verify

struct Check {
  std::string name;
  bool pass;
  double worst;
};

int cmd_verify(double tol, bool as_json, double k2_fault) {
  std::vector<Check> checks;
  auto record = [&](const std::string& name, bool pass, double worst) {
    checks.push_back({name, pass, worst});
  };

  // curve identities (scale-relative: the terms of D cancel on a curve)
  {
    double worst = 0.0;
    for (double s : {0.25, 0.5, 1.0, 2.0, 5.0}) {
      const auto g = gamma_point(s);
      worst = std::max(
          {worst, std::abs(dispersion(s, g.params)) / dispersion_scale(s, g.params),
           std::abs(dispersion_derivative(s, g.params)) /
               dispersion_derivative_scale(s, g.params)});
      for (int m : {2, 3, 4}) {
        const auto gm = gamma_m_point(m, s);
        worst = std::max(
            {worst, std::abs(dispersion(s, gm.params)) / dispersion_scale(s, gm.params),
             std::abs(dispersion(m * s, gm.params)) /
                 dispersion_scale(m * s, gm.params)});
      }
    }
    const auto lim = gamma_point(1e-3).params;
    worst = std::max(worst, std::max(std::abs(lim.alpha - 1.0),
                                     std::abs(lim.beta - 1.0 / 3.0)) *
                                1e-4);
    record("curve-identities", worst < 1e-10, worst);
  }

  const auto r1 = region1_samples(12);
  const auto r2 = region2_samples(12);
  std::vector<WaveFamily> fams;
  for (const auto& p : r1)
    for (const auto& f : wave_families(p)) fams.push_back(f);
  for (const auto& p : r2)
    for (const auto& f : wave_families(p)) fams.push_back(f);

  // root/region consistency on a coarse grid
  {
    int mismatches = 0;
    for (int i = 1; i <= 20; ++i) {
      for (int j = 1; j <= 20; ++j) {
        const FluidParams p{2.5 * i / 20.0, 1.5 * j / 20.0};
        const auto rc = classify_region(p, tol);
        const auto rs = positive_roots(p, suggested_k_max(p), tol);
        int expected = -1;
        if (rc.tag == RegionTag::RegionI) expected = 1;
        if (rc.tag == RegionTag::RegionII) expected = 2;
        if (rc.tag == RegionTag::NoBifurcation) expected = 0;
        if (expected >= 0 && rs.count() != expected) ++mismatches;
      }
    }
    record("root-region-consistency", mismatches == 0, mismatches);
  }

  // four-route agreement + sign theorem
  {
    double worst = 0.0;
    bool signs_ok = true;
    for (const auto& fam : fams) {
      const auto rep = stability_report(fam);
      if (rep.sign == SignClass::NearZero) continue;
      const double a = rep.m21_from_k2;
      const double b = m21_from_tilde(fam, rep.m21_tilde_direct);
      worst = std::max(worst, std::abs(a - b) / std::abs(a));
      if (!rep.sigma_route_skipped) {
        const double c = m21_from_tilde(fam, rep.m21_tilde_sigma);
        const double d =
            m21_from_tilde(fam, m21_tilde_from_chi(fam, rep.chi_ds));
        worst = std::max({worst, std::abs(a - c) / std::abs(a),
                          std::abs(a - d) / std::abs(a)});
      }
      const bool neg = a < 0.0;
      const bool d_pos = dispersion(2.0 * fam.k_star, fam.params) > 0.0;
      if (neg != d_pos) signs_ok = false;
    }
    record("four-route-agreement", worst < 1e-8, worst);
    record("sign-theorem", signs_ok, signs_ok ? 0.0 : 1.0);
  }

  // solvability oracle (fault injection hooks in here)
  {
    double worst = 0.0;
    for (const auto& fam : fams) {
      const double k2 = k2_coefficient(fam) + k2_fault;
      const double k2_solv = k2_from_solvability(fam);
      worst = std::max(worst,
                       std::abs(k2 - k2_solv) / (1.0 + std::abs(k2_solv)));
    }
    record("solvability", worst < 1e-9, worst);
  }

  // inner-product ledger
  {
    double worst_q = 0.0, worst_m = 0.0;
    for (const auto& fam : fams) {
      const auto led = inner_product_ledger(fam);
      worst_q = std::max(worst_q,
                         std::abs(led.psi_zeta_quad - led.psi_zeta_closed) /
                             std::abs(led.psi_zeta_closed));
      const double m21 = m21_via_k2(fam, k2_coefficient(fam));
      worst_m = std::max(worst_m, std::abs(led.m21_reconstructed - m21) /
                                      std::abs(m21));
    }
    record("ledger-quadrature", worst_q < 1e-12, worst_q);
    record("ledger-m21", worst_m < 1e-10, worst_m);
  }

  // Jordan chains and transverse scan
  {
    double worst = 0.0;
    bool scan_clean = true;
    for (const auto& fam : fams) {
      worst = std::max(
          worst, jordan_chain_residuals(fam.k_star, fam.params, 64, 32).max());
      const auto zeros =
          transverse_spectrum_scan(fam.k_star, fam.params, 5, 10.0, 400);
      if (transverse_scan_expected_clean(fam.k_star, fam.params)) {
        if (!zeros.empty()) scan_clean = false;
      } else if (zeros.empty()) {
        // the smaller-root family with 2 k1 < k2 must show its
        // structural zeros; an empty scan there means the scan is broken
        scan_clean = false;
      }
    }
    record("jordan-chains", worst < 1e-10, worst);
    record("transverse-scan", scan_clean, scan_clean ? 0.0 : 1.0);
  }

  // expansion residuals
  {
    double worst = 0.0;
    for (const auto& fam : fams) {
      const auto exp = make_expansion(fam);
      worst = std::max({worst, residual_order1(exp, 48, 24).max(),
                        residual_order2(exp, 48, 24).max()});
    }
    record("expansion-residuals", worst < 1e-10, worst);
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.pass;

  if (as_json) {
    json e = envelope("verify", /*with_timestamp=*/false);
    e["inputs"] = {{"tol", tol}};
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"check", c.name}, {"pass", c.pass}, {"worst", c.worst}});
    }
    e["checks"] = std::move(arr);
    e["pass"] = all;
    std::cout << e.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::printf("%-26s %s   worst %.3e\n", c.name.c_str(),
                  c.pass ? "PASS" : "FAIL", c.worst);
    }
    std::printf("verify: %s\n", all ? "all checks passed" : "FAILURES above");
  }
  if (!all) {
    for (const auto& c : checks) {
      if (!c.pass) std::cerr << "verify: check failed: " << c.name << "\n";
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gravity-capillary periodic wave toolkit"};
  app.require_subcommand(1);

  double alpha = 1.0, beta = 1.0, eps = 0.1, delta = 0.0, tol = 1e-12;
  double kmax = 0.0, ell = 0.0, s_min = 0.05, s_max = 5.0;
  int mmax = 4, family = 1, nx = 128, ny = 64, nz = 64, count = 200;
  std::string out, format = "csv";
  bool as_json = false;
  double k2_fault = 0.0;

  auto add_ab = [&](CLI::App* c) {
    c->add_option("--alpha", alpha, "gravity parameter (inverse Froude^2)");
    c->add_option("--beta", beta, "surface tension parameter (inverse Weber)");
    c->add_option("--tol", tol, "numerical tolerance");
  };

  auto* roots = app.add_subcommand("roots", "dispersion roots and region tag");
  add_ab(roots);
  roots->add_option("--kmax", kmax, "search interval bound (0 = automatic)");

  auto* gamma = app.add_subcommand("gamma", "export critical curves as CSV");
  gamma->add_option("--mmax", mmax, "highest resonance curve");
  gamma->add_option("--smin", s_min, "curve parameter lower bound");
  gamma->add_option("--smax", s_max, "curve parameter upper bound");
  gamma->add_option("--count", count, "points per curve");
  gamma->add_option("--out", out, "output CSV path")->required();

  auto* wave = app.add_subcommand("wave", "periodic wave expansion + profile");
  add_ab(wave);
  wave->add_option("--family", family, "wave family index (1 or 2)");
  wave->add_option("--eps", eps, "amplitude parameter");
  wave->add_option("--grid-nx", nx, "profile resolution");
  wave->add_option("--out", out, "profile CSV path");

  auto* stab = app.add_subcommand("stability", "transverse stability report");
  add_ab(stab);

  auto* map = app.add_subcommand("map", "parameter-plane sweep to CSV");
  double a_min = 0.1, a_max = 2.5, b_min = 0.05, b_max = 1.5;
  map->add_option("--alpha-min", a_min);
  map->add_option("--alpha-max", a_max);
  map->add_option("--beta-min", b_min);
  map->add_option("--beta-max", b_max);
  map->add_option("--grid-nx", nx, "beta count");
  map->add_option("--grid-ny", ny, "alpha count");
  map->add_option("--tol", tol);
  map->add_option("--out", out, "output CSV path")->required();

  auto* surf = app.add_subcommand("surface", "doubly periodic surface to CSV");
  add_ab(surf);
  surf->add_option("--family", family);
  surf->add_option("--eps", eps, "amplitude parameter");
  surf->add_option("--delta", delta, "transverse perturbation amplitude");
  surf->add_option("--ell", ell, "transverse wavenumber (0 = estimate)");
  surf->add_option("--grid-nx", nx);
  surf->add_option("--grid-nz", nz);
  surf->add_option("--out", out, "output CSV path")->required();

  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  verify->add_option("--tol", tol);
  verify->add_flag("--json", as_json, "machine-readable results");
  verify->add_option("--inject-k2-fault", k2_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(alpha, beta, kmax, tol, as_json);
    if (gamma->parsed()) return cmd_gamma(mmax, s_min, s_max, count, out);
    if (wave->parsed())
      return cmd_wave(alpha, beta, family, eps, nx, out, tol);
    if (stab->parsed()) return cmd_stability(alpha, beta, tol);
    if (map->parsed())
      return cmd_map(a_min, a_max, ny, b_min, b_max, nx, tol, out);
    if (surf->parsed())
      return cmd_surface(alpha, beta, family, eps, delta, ell, nx, nz, out,
                         tol);
    if (verify->parsed()) return cmd_verify(tol, as_json, k2_fault);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResonanceError& e) {
    std::cerr << "resonance: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
