#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string g_cli;

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("roots: Region I point") {
  const auto r = run("roots --alpha 0.5 --beta 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["region"] == "RegionI");
  CHECK(j["root_count"] == 1);
}

TEST_CASE("roots: invalid parameters exit 2") {
  CHECK(run("roots --alpha -1 --beta 1").code == 2);
  CHECK(run("roots --alpha 0.5 --beta 1 --no-such-flag").code == 2);
  CHECK(run("").code == 2);  // missing subcommand
}

TEST_CASE("stability: Region I verdict") {
  const auto r = run("stability --alpha 0.5 --beta 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["families"].size() == 1);
  CHECK(j["families"][0]["verdict"] == "TransverselyUnstable");
  for (auto& [key, d] : j["families"][0]["pairwise_rel_diff"].items()) {
    CHECK(d.get<double>() < 1e-8);
  }
}

TEST_CASE("stability: outside the regions exits 0 with a tag") {
  const auto r = run("stability --alpha 2 --beta 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["region"] == "NoBifurcation");
  CHECK(j.contains("warning"));
}

TEST_CASE("wave: envelope fields and zero-eps profile") {
  const std::string csv = "/tmp/wavetrans_test_wave.csv";
  const auto r = run("wave --alpha 0.5 --beta 1 --eps 0 --grid-nx 8 --out " +
                     csv);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["k_eps"] == j["k_star"]);
  CHECK(j["symmetry"]["eta_even"] == true);
  CHECK(j["symmetry"]["eps_sign_shift"] == true);

  std::ifstream f(csv);
  std::string line;
  std::getline(f, line);
  CHECK(line == "x,X,eta");
  while (std::getline(f, line)) {
    const auto last = line.rfind(',');
    CHECK(std::stod(line.substr(last + 1)) == 0.0);
  }
}

TEST_CASE("wave: k_eps tracks eps^2") {
  const auto r = run("wave --alpha 0.5 --beta 1 --eps 0.1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double expect =
      j["k_star"].get<double>() + 0.01 * j["k2"].get<double>();
  CHECK(j["k_eps"].get<double>() == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("gamma: limit end of the curve") {
  const std::string csv = "/tmp/wavetrans_test_gamma.csv";
  REQUIRE(run("gamma --mmax 2 --smin 0.001 --smax 1 --count 5 --out " + csv)
              .code == 0);
  std::ifstream f(csv);
  std::string header, first;
  std::getline(f, header);
  CHECK(header == "curve,m,s,beta,alpha");
  std::getline(f, first);
  // first row is near the limit point (beta, alpha) = (1/3, 1)
  std::stringstream ss(first);
  std::string curve, m, s, beta, alpha;
  std::getline(ss, curve, ',');
  std::getline(ss, m, ',');
  std::getline(ss, s, ',');
  std::getline(ss, beta, ',');
  std::getline(ss, alpha, ',');
  CHECK(std::abs(std::stod(beta) - 1.0 / 3.0) < 1e-5);
  CHECK(std::abs(std::stod(alpha) - 1.0) < 1e-5);
}

TEST_CASE("surface: metadata ell and delta-zero consistency") {
  const std::string csv = "/tmp/wavetrans_test_surface.csv";
  const auto r = run(
      "surface --alpha 0.5 --beta 1 --eps 0.1 --delta 0 --grid-nx 4 "
      "--grid-nz 3 --out " +
      csv);
  REQUIRE(r.code == 0);
  const auto content = slurp(csv);
  CHECK(content.find("ell=") != std::string::npos);
}

TEST_CASE("verify: clean run exits 0, injected fault exits 1") {
  const auto ok = run("verify --json");
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);

  const auto bad = run("verify --inject-k2-fault 1e-3");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("solvability") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("map: determinism byte for byte") {
  const std::string a = "/tmp/wavetrans_map_a.csv";
  const std::string b = "/tmp/wavetrans_map_b.csv";
  const std::string flags =
      "map --alpha-min 0.3 --alpha-max 2.2 --beta-min 0.1 --beta-max 1.2 "
      "--grid-nx 6 --grid-ny 6 --out ";
  REQUIRE(run(flags + a).code == 0);
  REQUIRE(run(flags + b).code == 0);
  const auto ca = slurp(a);
  CHECK(!ca.empty());
  CHECK(ca == slurp(b));
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli [doctest flags] <cli-binary>\n");
    return 1;
  }
  g_cli = argv[argc - 1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  return ctx.run();
}
