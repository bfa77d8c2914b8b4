// Command-line front end: one subcommand per experiment kind, JSON scenario
// configs in, report.json + CSV tables out. Exit codes: 0 all assertions
// pass, 1 configuration error, 2 assertion failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slantwave/experiments.hpp"

namespace {

using slantwave::json;

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
  return json::parse(in);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

/// Pulls --tol.<name> <value> pairs out of argv before CLI11 sees them.
std::map<std::string, double> extract_tol_overrides(
    std::vector<std::string>& args) {
  std::map<std::string, double> tol;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--tol.", 0) == 0) {
      std::string name = a.substr(6);
      std::string value;
      const auto eq = name.find('=');
      if (eq != std::string::npos) {
        value = name.substr(eq + 1);
        name = name.substr(0, eq);
      } else if (i + 1 < args.size()) {
        value = args[++i];
      } else {
        throw std::invalid_argument("missing value for " + a);
      }
      tol[name] = std::stod(value);
      continue;
    }
    kept.push_back(a);
  }
  args = kept;
  return tol;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  slantwave::RunConfig config;
  try {
    config.tol = extract_tol_overrides(args);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Verification lab for wave-equation energies on slanted "
               "space-time surfaces"};
  app.require_subcommand(1);

  std::string scenario_path, surface_json, foliation_json, grids_csv, eps_csv;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    auto* opt = cmd->add_option("--scenario", scenario_path,
                                "scenario config (JSON file)");
    if (needs_scenario) opt->check(CLI::ExistingFile);
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--seed", config.seed, "seed for randomized suites");
    cmd->add_option("--grids", grids_csv, "comma list of node counts");
    cmd->add_option("--surface", surface_json, "surface spec (inline JSON)");
    return cmd;
  };

  auto* solve_cmd = add_common(app.add_subcommand("solve", "run one scenario"),
                               true);
  (void)solve_cmd;

  auto* energy_cmd = add_common(
      app.add_subcommand("energy", "surface energies and theorem reports"),
      false);
  energy_cmd->add_option("--solve", config.solve_dir,
                         "directory of a previous solve to reuse");
  energy_cmd->add_option("--tau-grid", config.tau_grid,
                         "number of tau samples");

  auto* verify_cmd = add_common(
      app.add_subcommand("verify", "identity residual suites"), false);
  verify_cmd->add_option("--identities", config.identities,
                         "all|uu|uu3|flux|multiplier|decomp|gronwall");

  auto* compat_cmd = add_common(
      app.add_subcommand("compat", "boundary-data mollification sweep"), true);
  compat_cmd->add_option("--eps-sweep", eps_csv, "comma list of eps values");
  compat_cmd->add_option("--order", config.compat_order,
                         "compatibility order K");

  add_common(app.add_subcommand("converge", "manufactured-solution orders"),
             true);

  auto* lorentz_cmd =
      add_common(app.add_subcommand("lorentz", "boost invariance check"),
                 false);
  lorentz_cmd->add_option("--v", config.lorentz_v, "boost velocity in (-1,1)");

  auto* tau_cmd = add_common(
      app.add_subcommand("tau-sweep", "energies along a surface family"),
      true);
  tau_cmd->add_option("--tau-grid", config.tau_grid, "number of tau samples");
  tau_cmd->add_option("--foliation", foliation_json,
                      "foliation spec (inline JSON)");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 vector parse convention
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    config.kind = app.get_subcommands().front()->get_name();
    if (!scenario_path.empty()) config.scenario = load_config_file(scenario_path);
    if (config.scenario.is_null()) config.scenario = json::object();
    if (config.kind != "lorentz" && config.kind != "verify" &&
        config.solve_dir.empty() && !config.scenario.contains("manufactured") &&
        !config.scenario.contains("domain"))
      throw std::invalid_argument("a --scenario config is required");
    if (config.kind == "verify" && !config.scenario.contains("manufactured") &&
        !config.scenario.contains("domain"))
      config.scenario = json{{"manufactured", {{"name", "variable-a"},
                                               {"params", {{"phase", 0.4}}}}}};
    if (!grids_csv.empty()) config.grids = parse_int_list(grids_csv);
    if (!eps_csv.empty()) config.eps_sweep = parse_double_list(eps_csv);
    if (!surface_json.empty()) config.surface = json::parse(surface_json);
    if (!foliation_json.empty()) config.foliation = json::parse(foliation_json);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  try {
    const slantwave::RunOutcome outcome = slantwave::run(config);
    if (!outcome.failures.empty()) {
      for (const auto& name : outcome.failures)
        std::cerr << "FAIL " << name << "\n";
    }
    if (config.out_dir.empty()) std::cout << outcome.report.dump(2) << "\n";
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
}
