#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slantwave/compat.hpp"
#include "slantwave/identities.hpp"
#include "slantwave/lorentz.hpp"
#include "slantwave/scenario.hpp"

namespace slantwave {

/// Central tolerance table; every threshold the experiments assert against
/// lives here with its documented default and can be overridden per run.
struct Tolerances {
  double order_min = 1.0;           // balance/identity refinement slope
  double solver_order_lo = 1.9;     // manufactured error slope window
  double solver_order_hi = 2.1;
  double decomp = 1e-10;            // |nu_A^2 M11 - 1| and expansion error
  double poly_exact = 1e-10;        // polynomial-exactness residuals (x scale)
  double gronwall_invariance = 1e-8;
  double conservation_rel = 1e-3;   // |E - e0| / e0 for zero-data scenarios
  double flux_rel = 1e-2;           // flux residual / e0 at the finest grid
  double triangle_slack = 1e-12;    // energy triangle slack (x scale)
  double compat_residual = 1e-10;   // order-k compatibility (x scale)
  double lorentz_order = 1.5;
  double lorentz_zero = 1e-8;       // v = 0 residual ceiling

  static Tolerances with_overrides(const std::map<std::string, double>& o);
  json to_json() const;
};

struct RunConfig {
  std::string kind;  // solve|energy|verify|compat|converge|lorentz|tau-sweep
  json scenario;
  std::string out_dir;
  std::uint64_t seed = 12345;
  std::vector<int> grids;
  int tau_grid = 9;
  std::vector<double> eps_sweep{0.1, 0.05, 0.025};
  std::string identities = "all";
  int compat_order = -1;  // default: ceil(n/2) + 2
  double lorentz_v = 0.5;
  json surface;    // overrides scenario["surface"]
  json foliation;  // overrides scenario["foliation"]
  std::string solve_dir;  // energy: reuse a saved solve
  std::map<std::string, double> tol;
};

struct RunOutcome {
  json report;
  int exit_code = 0;  // 0 pass, 1 config error, 2 assertion failure
  std::vector<std::string> failures;
};

/// Executes one experiment and writes report.json (plus CSVs) to out_dir.
/// Reports are byte-deterministic for a fixed config and seed.
RunOutcome run(const RunConfig& config);

/// Least-squares slope of log(err) vs log(h).
double fit_order(const std::vector<double>& h, const std::vector<double>& err);

void write_report(const std::string& out_dir, const json& report);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Solve persistence: meta.json (config, dt, levels) + fields.csv
/// (x, y, t, re, im).
void save_solve(const std::string& dir, const Scenario& scenario,
                const SolveResult& run, const json& scenario_config);
struct LoadedSolve {
  Scenario scenario;
  SolveResult run;
};
LoadedSolve load_solve(const std::string& dir);

}  // namespace slantwave
