#pragma once

// Command-line front end: `states`, `energies`, `verify`, `figure`, `info`.
// Exit codes: 0 success, 1 verification failure, 2 invalid config/arguments,
// 3 I/O failure.

#include <string>
#include <vector>

namespace fracosc::cli {

struct RunConfig {
  std::vector<double> alphas{1.2, 1.5, 2.0};
  std::vector<int> ns{0, 1, 2};
  double k_max = 20.0;
  int points = 4096;
  double tol = -1.0;  // < 0: per-check defaults
  std::string out_dir = "out";
  std::vector<std::string> formats{"csv", "svg", "json"};
  bool paper_verbatim_e2 = false;
  bool overlay = false;
};

// args excludes argv[0]. Returns the process exit code.
int run_cli(const std::vector<std::string>& args);

}  // namespace fracosc::cli
