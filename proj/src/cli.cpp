#include "fracosc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracosc/io.hpp"
#include "fracosc/ladder.hpp"
#include "fracosc/operators.hpp"
#include "fracosc/report.hpp"
#include "fracosc/spectral.hpp"

namespace fracosc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt_alpha(double a) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", a);
  return buf;
}

void validate(const RunConfig& cfg) {
  for (double a : cfg.alphas) check_alpha_range(a);
  for (int n : cfg.ns)
    if (n < 0 || n > kDefaultMaxExcitation)
      throw std::domain_error("excitation level out of range");
  if (std::isnan(cfg.tol)) throw std::domain_error("tolerance must be a number");
  if (cfg.points < 16) throw std::domain_error("points must be a power of two >= 16");
}

// Enlarges k_max (doubling) until every requested state has decayed below the
// truncation threshold at the grid edge.
UniformGrid working_grid(const RunConfig& cfg, double alpha) {
  double k_max = cfg.k_max;
  const int n_max = cfg.ns.empty() ? 0 : *std::max_element(cfg.ns.begin(), cfg.ns.end());
  const PowerExpFunction top = excited_state(alpha, {n_max});
  UniformGrid grid(k_max, cfg.points);
  for (int i = 0; i < 8 && !truncation_ok(top, grid); ++i) {
    k_max *= 2.0;
    grid = UniformGrid(k_max, cfg.points);
  }
  return grid;
}

void ensure_out_dir(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw IOError("cannot create output directory: " + cfg.out_dir);
}

bool wants(const RunConfig& cfg, const std::string& f) {
  return std::find(cfg.formats.begin(), cfg.formats.end(), f) != cfg.formats.end();
}

// Global phase making the maximum-magnitude sample real-positive.
void phase_fix(SampledState& s) {
  Complex vmax{};
  double best = 0.0;
  for (const auto& v : s.values)
    if (std::abs(v) > best) {
      best = std::abs(v);
      vmax = v;
    }
  if (best == 0.0) return;
  const Complex rot = std::conj(vmax) / best;
  for (auto& v : s.values) v *= rot;
}

int cmd_states(const RunConfig& cfg) {
  ensure_out_dir(cfg);
  for (double a : cfg.alphas) {
    const UniformGrid grid = working_grid(cfg, a);
    for (int n : cfg.ns) {
      const PowerExpFunction phi = excited_state(a, {n});
      const SampledState mom = sample(phi, grid, n);
      const std::string stem =
          "state_a" + fmt_alpha(a) + "_n" + std::to_string(n);

      std::vector<std::vector<double>> rows;
      rows.reserve(mom.values.size());
      for (int j = 0; j < grid.n_points; ++j)
        rows.push_back({grid.point(j), mom.values[j].real(), mom.values[j].imag()});
      write_csv(fs::path(cfg.out_dir) / (stem + "_momentum.csv"), {"k", "re", "im"},
                rows);

      SampledState pos = to_position(mom);
      l2_normalize(pos);
      phase_fix(pos);
      rows.clear();
      for (int j = 0; j < pos.grid.n_points; ++j)
        rows.push_back(
            {pos.grid.point(j), pos.values[j].real(), pos.values[j].imag()});
      write_csv(fs::path(cfg.out_dir) / (stem + "_position.csv"), {"x", "re", "im"},
                rows);
    }
  }
  if (wants(cfg, "json")) {
    json meta;
    meta["engine_version"] = kEngineVersion;
    meta["position_normalization"] = "discrete L2, max-|psi| sample rotated real-positive";
    meta["grid"] = {{"half_step_offset", true}, {"points", cfg.points}};
    std::ofstream out(fs::path(cfg.out_dir) / "states_meta.json", std::ios::binary);
    if (!out) throw IOError("cannot write states_meta.json");
    out << meta.dump(2) << "\n";
  }
  return 0;
}

int cmd_energies(const RunConfig& cfg) {
  ensure_out_dir(cfg);
  for (double a : cfg.alphas) {
    const UniformGrid grid(cfg.k_max, cfg.points);
    const double radius = 5.0 * grid.spacing();
    for (int n : cfg.ns) {
      const EnergyCurve curve = energy_curve(a, n, grid.points(), radius);
      const std::string stem = "energy_a" + fmt_alpha(a) + "_n" + std::to_string(n);
      std::vector<std::vector<double>> rows;
      for (const auto& [k, e] : curve.samples) rows.push_back({k, e});
      write_csv(fs::path(cfg.out_dir) / (stem + ".csv"), {"k", "E"}, rows);

      json meta;
      meta["alpha"] = a;
      meta["n"] = n;
      meta["exclusion_radius"] = radius;
      meta["excluded_windows"] = json::array();
      for (const auto& [lo, hi] : curve.excluded_windows)
        meta["excluded_windows"].push_back({lo, hi});
      std::ofstream out(fs::path(cfg.out_dir) / (stem + "_meta.json"),
                        std::ios::binary);
      if (!out) throw IOError("cannot write " + stem + "_meta.json");
      out << meta.dump(2) << "\n";
    }
  }
  return 0;
}

json report_to_json(const VerificationReport& rep) {
  json j;
  j["engine_version"] = rep.engine_version;
  j["timestamp"] = rep.timestamp;
  j["overall_pass"] = rep.overall_pass;
  j["checks"] = json::array();
  for (const auto& r : rep.records)
    j["checks"].push_back({{"name", r.name},
                           {"alpha", r.alpha},
                           {"n", r.n},
                           {"residual", r.residual},
                           {"tolerance", r.tolerance},
                           {"pass", r.pass}});
  j["e2_printed_vs_canonical"] = json::array();
  for (const auto& d : rep.e2_divergence)
    j["e2_printed_vs_canonical"].push_back({{"alpha", d.alpha},
                                            {"max_abs_divergence", d.max_abs},
                                            {"k_at_max", d.k_at_max},
                                            {"divergence_at_k1", d.at_k1}});
  return j;
}

int cmd_verify(const RunConfig& cfg) {
  ensure_out_dir(cfg);
  VerifyOptions opt;
  opt.k_max = cfg.k_max;
  opt.points = cfg.points;
  opt.tol_override = cfg.tol;
  const VerificationReport rep = run_verification(opt);

  {
    std::ofstream out(fs::path(cfg.out_dir) / "report.json", std::ios::binary);
    if (!out) throw IOError("cannot write report.json");
    out << report_to_json(rep).dump(2) << "\n";
  }

  for (const auto& r : rep.records) {
    std::printf("%s  %-28s alpha=%-4s n=%-2d residual=%.3e tol=%.1e\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), fmt_alpha(r.alpha).c_str(),
                r.n, r.residual, r.tolerance);
  }
  if (cfg.paper_verbatim_e2) {
    std::printf("\nprinted E2 vs canonical form (agreement holds at |k|=1 and alpha=2):\n");
    for (const auto& d : rep.e2_divergence)
      std::printf("  alpha=%-4s max|diff|=%.6e at k=%.3f   |diff(k=1)|=%.3e\n",
                  fmt_alpha(d.alpha).c_str(), d.max_abs, d.k_at_max, d.at_k1);
  }
  std::printf("overall: %s\n", rep.overall_pass ? "PASS" : "FAIL");
  return rep.overall_pass ? 0 : 1;
}

int cmd_figure(const RunConfig& cfg) {
  ensure_out_dir(cfg);
  struct Style {
    double alpha;
    std::string color;
    bool dashed;
  };
  std::vector<Style> styles;
  const std::vector<std::string> palette{"#1f77b4", "#d62728", "#555555"};
  for (size_t i = 0; i < cfg.alphas.size() && i < 2; ++i)
    styles.push_back({cfg.alphas[i], palette[i], i == 0});
  if (cfg.overlay) styles.push_back({2.0, palette[2], false});

  const char* panel_names = "abcdef";
  // panels a-c: psi_n(x) real part; d-f: E_n(k)
  for (int n = 0; n <= 2; ++n) {
    std::vector<SvgCurve> wf_curves, en_curves;
    for (const auto& st : styles) {
      const UniformGrid grid = working_grid(cfg, st.alpha);
      SampledState pos = to_position(sample(excited_state(st.alpha, {n}), grid, n));
      l2_normalize(pos);
      phase_fix(pos);
      SvgCurve wf{{}, st.color, st.dashed};
      std::vector<std::vector<double>> wf_rows;
      for (int j = 0; j < pos.grid.n_points; ++j) {
        const double x = pos.grid.point(j);
        if (std::abs(x) > 5.0) continue;
        wf.points.push_back({x, pos.values[j].real()});
        wf_rows.push_back({x, pos.values[j].real()});
      }
      wf_curves.push_back(std::move(wf));
      write_csv(fs::path(cfg.out_dir) / ("fig1_" + std::string(1, panel_names[n]) +
                                         "_a" + fmt_alpha(st.alpha) + ".csv"),
                {"x", "psi_re"}, wf_rows);

      // energy branch on (0, 3], gaps at the node windows
      std::vector<double> ks;
      constexpr double step = 0.005;
      for (double k = 0.2; k <= 3.0 + 0.5 * step; k += step) ks.push_back(k);
      const EnergyCurve curve = energy_curve(st.alpha, n, ks, 5.0 * step);
      SvgCurve en{{}, st.color, st.dashed};
      std::vector<std::vector<double>> en_rows;
      double prev_k = curve.samples.front().first;
      for (const auto& [k, e] : curve.samples) {
        if (k - prev_k > 1.5 * step)
          en.points.push_back({0.5 * (k + prev_k), std::nan("")});
        en.points.push_back({k, e});
        en_rows.push_back({k, e});
        prev_k = k;
      }
      en_curves.push_back(std::move(en));
      write_csv(fs::path(cfg.out_dir) / ("fig1_" + std::string(1, panel_names[n + 3]) +
                                         "_a" + fmt_alpha(st.alpha) + ".csv"),
                {"k", "E"}, en_rows);
    }
    if (wants(cfg, "svg")) {
      write_svg_plot(fs::path(cfg.out_dir) /
                         ("fig1_" + std::string(1, panel_names[n]) + ".svg"),
                     "psi_" + std::to_string(n) + "(x)", wf_curves);
      write_svg_plot(fs::path(cfg.out_dir) /
                         ("fig1_" + std::string(1, panel_names[n + 3]) + ".svg"),
                     "E_" + std::to_string(n) + "(k)", en_curves);
    }
  }
  return 0;
}

int cmd_info() {
  std::printf("fracosc %s\n", kEngineVersion);
  std::printf("quantum fractional oscillator via momentum-space factorization\n");
  std::printf("conventions:\n");
  std::printf("  H = |k|^alpha - d^2/dk^2 (momentum representation)\n");
  std::printf("  psi(x) = (2pi)^{-1/2} Int phi(k) exp(ikx) dk\n");
  std::printf("  grid: symmetric, half-step offset, k=0 never sampled\n");
  return 0;
}

// Plain-text key=value config; flags win on conflict.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

template <typename T>
std::vector<T> parse_list(const std::string& s) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream conv(item);
    T v;
    conv >> v;
    if (conv.fail()) throw std::domain_error("bad list item in config: " + item);
    out.push_back(v);
  }
  return out;
}

void apply_config_file(RunConfig& cfg, const std::map<std::string, std::string>& kv,
                       const std::map<std::string, bool>& flag_seen) {
  auto unset = [&](const char* name) {
    auto it = flag_seen.find(name);
    return it == flag_seen.end() || !it->second;
  };
  for (const auto& [key, val] : kv) {
    if (key == "alpha" && unset("alpha")) cfg.alphas = parse_list<double>(val);
    else if (key == "n" && unset("n")) cfg.ns = parse_list<int>(val);
    else if (key == "k_max" && unset("k_max")) cfg.k_max = std::stod(val);
    else if (key == "points" && unset("points")) cfg.points = std::stoi(val);
    else if (key == "tol" && unset("tol")) cfg.tol = std::stod(val);
    else if (key == "out" && unset("out")) cfg.out_dir = val;
    else if (key == "format" && unset("format")) cfg.formats = parse_list<std::string>(val);
    else if (key == "alpha" || key == "n" || key == "k_max" || key == "points" ||
             key == "tol" || key == "out" || key == "format")
      ;  // flag takes precedence
    else
      throw std::domain_error("unknown config key: " + key);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string config_file;

  CLI::App app{"quantum fractional oscillator: factorization engine"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alphas, "Levy indices (1 < alpha <= 2)")
        ->delimiter(',');
    sub->add_option("--n", cfg.ns, "excitation levels")->delimiter(',');
    sub->add_option("--k-max", cfg.k_max, "momentum grid half-width");
    sub->add_option("--points", cfg.points, "grid points (power of two)");
    sub->add_option("--tol", cfg.tol, "override residual tolerances");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.formats, "output formats: csv,svg,json")
        ->delimiter(',');
    sub->add_option("--config", config_file, "key=value config file (flags win)");
    sub->add_flag("--paper-verbatim-e2", cfg.paper_verbatim_e2,
                  "use/compare the published E2 formula verbatim");
  };

  CLI::App* states = app.add_subcommand("states", "emit state CSVs");
  CLI::App* energies = app.add_subcommand("energies", "emit energy-curve CSVs");
  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  CLI::App* figure = app.add_subcommand("figure", "emit the six-panel figure bundle");
  CLI::App* info = app.add_subcommand("info", "print version and conventions");
  for (CLI::App* sub : {states, energies, verify, figure}) add_common(sub);
  figure->add_flag("--overlay", cfg.overlay, "overlay alpha=2 reference curves");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_file.empty()) {
      std::map<std::string, bool> seen;
      for (const char* name : {"alpha", "n", "k_max", "points", "tol", "out", "format"}) {
        std::string flag = std::string("--") + name;
        std::replace(flag.begin(), flag.end(), '_', '-');
        seen[name] = sub->count(flag) > 0;
      }
      apply_config_file(cfg, read_config_file(config_file), seen);
    }
    validate(cfg);

    if (sub == states) return cmd_states(cfg);
    if (sub == energies) return cmd_energies(cfg);
    if (sub == verify) return cmd_verify(cfg);
    if (sub == figure) return cmd_figure(cfg);
    return cmd_info();
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IOError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return 1;
  }
}

}  // namespace fracosc::cli
