#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracosc/cli.hpp"

namespace fs = std::filesystem;
using fracosc::cli::run_cli;

namespace {

fs::path fresh_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("fracosc_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(FRACOSC_CLI_PATH) + " " + args +
                          " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("states: files, schema, and Gaussian content at alpha=2") {
  const fs::path dir = fresh_dir("states");
  CHECK(run_cli({"states", "--alpha", "2.0", "--n", "0", "--points", "1024",
                 "--out", dir.string()}) == 0);
  const std::string mom = slurp(dir / "state_a2_n0_momentum.csv");
  CHECK(mom.substr(0, 8) == "k,re,im\n");
  CHECK(mom.find("\r") == std::string::npos);
  CHECK(fs::exists(dir / "state_a2_n0_position.csv"));

  // 12 CSVs for the Fig. 1 inputs
  const fs::path dir2 = fresh_dir("states12");
  CHECK(run_cli({"states", "--alpha", "1.2,1.5", "--n", "0,1,2", "--points", "512",
                 "--out", dir2.string()}) == 0);
  int count = 0;
  for (const auto& e : fs::directory_iterator(dir2))
    if (e.path().extension() == ".csv") ++count;
  CHECK(count == 12);
}

TEST_CASE("states rejects alpha out of range with exit code 2") {
  CHECK(run_cli({"states", "--alpha", "2.5", "--out", "/tmp/fracosc_never"}) == 2);
  CHECK(run_binary("states --alpha 2.5") == 2);
}

TEST_CASE("unknown arguments exit with code 2") {
  CHECK(run_binary("states --definitely-not-a-flag") == 2);
  CHECK(run_binary("not_a_subcommand") == 2);
}

TEST_CASE("unwritable output directory exits with I/O code 3") {
  CHECK(run_cli({"states", "--alpha", "2.0", "--n", "0", "--points", "64",
                 "--out", "/proc/fracosc_cannot_write"}) == 3);
}

TEST_CASE("energies: constant columns at alpha=2 and node gap metadata") {
  const fs::path dir = fresh_dir("energies");
  CHECK(run_cli({"energies", "--alpha", "2.0", "--n", "0,1,2", "--points", "1024",
                 "--k-max", "5", "--out", dir.string()}) == 0);
  for (int n = 0; n <= 2; ++n) {
    std::ifstream in(dir / ("energy_a2_n" + std::to_string(n) + ".csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,E");
    int rows = 0;
    while (std::getline(in, line)) {
      const double e = std::stod(line.substr(line.find(',') + 1));
      CHECK(e == doctest::Approx(2.0 * n + 1.0).epsilon(1e-9));
      ++rows;
    }
    CHECK(rows > 500);
    CHECK(fs::exists(dir / ("energy_a2_n" + std::to_string(n) + "_meta.json")));
  }

  // E(1) = 0.75 for alpha=1.5, n=0
  const fs::path dir2 = fresh_dir("energies15");
  CHECK(run_cli({"energies", "--alpha", "1.5", "--n", "0", "--points", "1024",
                 "--k-max", "4", "--out", dir2.string()}) == 0);
  std::ifstream in(dir2 / "energy_a1.5_n0.csv");
  std::string line;
  std::getline(in, line);
  double best_k = 1e9, best_e = 0.0;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const double k = std::stod(line.substr(0, comma));
    const double e = std::stod(line.substr(comma + 1));
    if (std::abs(k - 1.0) < std::abs(best_k - 1.0)) {
      best_k = k;
      best_e = e;
    }
  }
  CHECK(best_e == doctest::Approx(0.75).epsilon(1e-3));
}

TEST_CASE("verify: default passes with exit 0, tol=0 fails with exit 1") {
  const fs::path dir = fresh_dir("verify");
  CHECK(run_binary("verify --out " + (dir / "ok").string()) == 0);
  CHECK(fs::exists(dir / "ok" / "report.json"));
  CHECK(run_binary("verify --tol 0 --out " + (dir / "bad").string()) == 1);
}

TEST_CASE("figure: 6 SVG + 12 CSV, byte-deterministic") {
  const fs::path d1 = fresh_dir("fig1");
  const fs::path d2 = fresh_dir("fig2");
  for (const auto& d : {d1, d2})
    CHECK(run_cli({"figure", "--alpha", "1.2,1.5", "--points", "1024", "--out",
                   d.string()}) == 0);
  int svg = 0, csv = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    if (e.path().extension() == ".svg") ++svg;
    if (e.path().extension() == ".csv") ++csv;
  }
  CHECK(svg == 6);
  CHECK(csv == 12);
  for (const auto& e : fs::directory_iterator(d1))
    CHECK(slurp(e.path()) == slurp(d2 / e.path().filename()));
}

TEST_CASE("config file provides defaults, flags win") {
  const fs::path dir = fresh_dir("cfg");
  const fs::path cfgfile = dir / "run.cfg";
  {
    std::ofstream out(cfgfile);
    out << "# sample config\nalpha = 2.0\nn = 0\npoints = 512\nout = "
        << (dir / "from_cfg").string() << "\n";
  }
  CHECK(run_cli({"states", "--config", cfgfile.string()}) == 0);
  CHECK(fs::exists(dir / "from_cfg" / "state_a2_n0_momentum.csv"));

  // flag overrides the config value
  CHECK(run_cli({"states", "--config", cfgfile.string(), "--out",
                 (dir / "from_flag").string()}) == 0);
  CHECK(fs::exists(dir / "from_flag" / "state_a2_n0_momentum.csv"));

  {
    std::ofstream out(cfgfile, std::ios::app);
    out << "bogus_key = 1\n";
  }
  CHECK(run_cli({"states", "--config", cfgfile.string()}) == 2);
}

TEST_CASE("info prints version") {
  CHECK(run_cli({"info"}) == 0);
}
