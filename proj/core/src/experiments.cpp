#include "slantwave/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace slantwave {

namespace fs = std::filesystem;

Tolerances Tolerances::with_overrides(
    const std::map<std::string, double>& o) {
  Tolerances t;
  for (const auto& [name, value] : o) {
    if (name == "order_min") t.order_min = value;
    else if (name == "solver_order_lo") t.solver_order_lo = value;
    else if (name == "solver_order_hi") t.solver_order_hi = value;
    else if (name == "decomp") t.decomp = value;
    else if (name == "poly_exact") t.poly_exact = value;
    else if (name == "gronwall_invariance") t.gronwall_invariance = value;
    else if (name == "conservation_rel") t.conservation_rel = value;
    else if (name == "flux_rel") t.flux_rel = value;
    else if (name == "triangle_slack") t.triangle_slack = value;
    else if (name == "compat_residual") t.compat_residual = value;
    else if (name == "lorentz_order") t.lorentz_order = value;
    else if (name == "lorentz_zero") t.lorentz_zero = value;
    else
      throw std::invalid_argument("unknown tolerance '" + name + "'");
  }
  return t;
}

json Tolerances::to_json() const {
  return json{{"order_min", order_min},
              {"solver_order_lo", solver_order_lo},
              {"solver_order_hi", solver_order_hi},
              {"decomp", decomp},
              {"poly_exact", poly_exact},
              {"gronwall_invariance", gronwall_invariance},
              {"conservation_rel", conservation_rel},
              {"flux_rel", flux_rel},
              {"triangle_slack", triangle_slack},
              {"compat_residual", compat_residual},
              {"lorentz_order", lorentz_order},
              {"lorentz_zero", lorentz_zero}};
}

double fit_order(const std::vector<double>& h, const std::vector<double>& err) {
  if (h.size() != err.size() || h.size() < 2)
    throw std::invalid_argument("fit_order: need >= 2 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(h.size());
  for (int i = 0; i < n; ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(std::max(err[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_report(const std::string& out_dir, const json& report) {
  fs::create_directories(out_dir);
  std::ofstream out(fs::path(out_dir) / "report.json");
  out << report.dump(2) << "\n";
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path);
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  out.precision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
  }
}

void save_solve(const std::string& dir, const Scenario& scenario,
                const SolveResult& run, const json& scenario_config) {
  fs::create_directories(dir);
  json meta;
  meta["schema_version"] = 1;
  meta["scenario"] = scenario_config;
  meta["dt"] = run.dt;
  meta["steps"] = run.steps;
  meta["n_levels"] = run.u.n_levels();
  if (run.max_error) meta["max_error"] = *run.max_error;
  std::ofstream(fs::path(dir) / "meta.json") << meta.dump(2) << "\n";

  const auto& grid = *scenario.grid;
  std::ofstream out(fs::path(dir) / "fields.csv");
  out << "x,y,t,re,im\n";
  out.precision(17);
  for (int level = 0; level < run.u.n_levels(); ++level) {
    const double t = level * run.dt;
    for (int node = 0; node < grid.num_nodes(); ++node) {
      const Vec x = grid.coord(node);
      const Complex v = run.u.at(level, node);
      out << x.x << "," << x.y << "," << t << "," << v.real() << ","
          << v.imag() << "\n";
    }
  }
}

LoadedSolve load_solve(const std::string& dir) {
  std::ifstream meta_in(fs::path(dir) / "meta.json");
  if (!meta_in) throw std::invalid_argument("load_solve: missing meta.json");
  json meta = json::parse(meta_in);

  LoadedSolve loaded;
  loaded.scenario = scenario_from_config(meta.at("scenario"));
  loaded.run.dt = meta.at("dt").get<double>();
  loaded.run.steps = meta.at("steps").get<int>();
  const int n_levels = meta.at("n_levels").get<int>();
  loaded.run.u =
      SpaceTimeField(*loaded.scenario.grid, n_levels, loaded.run.dt);
  loaded.run.u.set_initial_velocity(loaded.scenario.initial.u1);

  std::ifstream in(fs::path(dir) / "fields.csv");
  if (!in) throw std::invalid_argument("load_solve: missing fields.csv");
  std::string line;
  std::getline(in, line);  // header
  const int nodes = loaded.scenario.grid->num_nodes();
  for (int level = 0; level < n_levels; ++level) {
    for (int node = 0; node < nodes; ++node) {
      if (!std::getline(in, line))
        throw std::invalid_argument("load_solve: truncated fields.csv");
      double vals[5];
      std::stringstream ss(line);
      std::string cell;
      for (double& val : vals) {
        std::getline(ss, cell, ',');
        val = std::stod(cell);
      }
      loaded.run.u.at(level, node) = Complex{vals[3], vals[4]};
    }
  }
  return loaded;
}

namespace {

struct Assertions {
  json list = json::array();
  std::vector<std::string> failures;

  void check(const std::string& name, bool pass, double value,
             double threshold) {
    list.push_back(json{{"name", name},
                        {"pass", pass},
                        {"value", value},
                        {"threshold", threshold}});
    if (!pass) failures.push_back(name);
  }
  bool all_pass() const { return failures.empty(); }
};

/// Rewrites the nodes-per-axis of a scenario config (manufactured or
/// explicit) for refinement sweeps.
json config_with_n(json config, int n) {
  if (config.contains("manufactured")) {
    auto& m = config["manufactured"];
    if (m.is_string()) m = json{{"name", m.get<std::string>()}};
    m["params"]["n"] = n;
    return config;
  }
  auto& nodes = config["grid"]["nodes"];
  const bool two_d = nodes.size() > 1;
  nodes = two_d ? json::array({n, n}) : json::array({n});
  return config;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo + (hi - lo) * i / std::max(count - 1, 1);
  return out;
}

Hypersurface pick_surface(const RunConfig& config, const json& scenario_config,
                          const SpatialGrid& grid) {
  if (!config.surface.is_null())
    return surface_from_config(config.surface, grid);
  if (scenario_config.contains("surface"))
    return surface_from_config(scenario_config.at("surface"), grid);
  return Hypersurface::constant(grid,
                                0.5 * grid.domain().time_horizon);
}

json base_report(const RunConfig& config, const Tolerances& tol) {
  json report;
  report["schema_version"] = 1;
  report["kind"] = config.kind;
  report["seed"] = config.seed;
  report["scenario_hash"] = config_hash(config.scenario);
  report["tolerances"] = tol.to_json();
  return report;
}

// ---------------------------------------------------------------------------

RunOutcome run_solve(const RunConfig& config, const Tolerances& tol) {
  RunOutcome out;
  Scenario scenario = scenario_from_config(config.scenario);
  const SolveResult result = solve(scenario);

  json report = base_report(config, tol);
  report["results"]["name"] = scenario.name;
  report["results"]["dt"] = result.dt;
  report["results"]["steps"] = result.steps;
  report["results"]["e0"] =
      initial_energy(*scenario.grid, scenario.A, scenario.initial);
  if (result.max_error) report["results"]["max_error"] = *result.max_error;
  if (!config.out_dir.empty()) {
    save_solve(config.out_dir, scenario, result, config.scenario);
    write_report(config.out_dir, report);
  }
  out.report = report;
  return out;
}

RunOutcome run_energy(const RunConfig& config, const Tolerances& tol) {
  RunOutcome out;
  Scenario scenario;
  SolveResult result;
  if (!config.solve_dir.empty()) {
    LoadedSolve loaded = load_solve(config.solve_dir);
    scenario = std::move(loaded.scenario);
    result = std::move(loaded.run);
  } else {
    scenario = scenario_from_config(config.scenario);
    result = solve(scenario);
  }
  const auto& grid = *scenario.grid;
  const Hypersurface surface = pick_surface(config, config.scenario, grid);

  const auto causal = classify(surface, scenario.A);
  const EnergyReport er = theorem_reports(scenario, result, surface);

  Assertions asserts;
  asserts.check("h1_within_bound", er.h1_ok, er.h1_value, er.h1_bound);
  if (er.zero_data) {
    const double rel = er.conservation_residual / std::max(er.e0, 1e-300);
    asserts.check("conservation_rel", rel <= tol.conservation_rel, rel,
                  tol.conservation_rel);
  }

  json report = base_report(config, tol);
  auto& res = report["results"];
  res["causal_class"] = to_string(causal.kind);
  res["max_slope"] = causal.max_slope;
  res["energy"] = {{"e_surface", er.e_surface},
                   {"e0", er.e0},
                   {"lhs", er.lhs},
                   {"rhs_energy_diff", er.rhs_energy_diff},
                   {"ratio_energy_diff", er.ratio_energy_diff},
                   {"rhs_energy_bound", er.rhs_energy_bound},
                   {"ratio_energy_bound", er.ratio_energy_bound},
                   {"conormal_sq", er.conormal_sq},
                   {"rhs_conormal", er.rhs_conormal},
                   {"ratio_conormal", er.ratio_conormal},
                   {"norm_grad_u0", er.norm_grad_u0},
                   {"norm_u1", er.norm_u1},
                   {"norm_f_h1_sigma0_sq", er.norm_f_h1_sigma0_sq},
                   {"norm_g_q0_sq", er.norm_g_q0_sq},
                   {"t2", er.t2},
                   {"bracket_t2", er.bracket_t2},
                   {"zero_data", er.zero_data},
                   {"conservation_residual", er.conservation_residual},
                   {"chain_rule_discrepancy", er.chain_rule_discrepancy},
                   {"h1_value", er.h1_value},
                   {"h1_bound", er.h1_bound}};

  // E_tau vs tau table.
  std::vector<std::vector<double>> rows;
  for (double tau : linspace(0.0, surface.t2(), std::max(config.tau_grid, 2))) {
    rows.push_back({tau, partial_energy(result.u, surface, scenario.A, tau),
                    horizontal_energy(result.u, scenario.A, surface, tau)});
  }
  if (!config.out_dir.empty()) {
    write_csv((fs::path(config.out_dir) / "e_tau.csv").string(),
              {"tau", "e_partial", "e_horizontal"}, rows);
  }

  report["assertions"] = asserts.list;
  out.failures = asserts.failures;
  out.exit_code = asserts.all_pass() ? 0 : 2;
  if (!config.out_dir.empty()) write_report(config.out_dir, report);
  out.report = report;
  return out;
}

RunOutcome run_converge(const RunConfig& config, const Tolerances& tol) {
  RunOutcome out;
  std::vector<int> grids = config.grids;
  if (grids.empty()) grids = {128, 256, 512};
  if (!std::is_sorted(grids.begin(), grids.end()) ||
      std::adjacent_find(grids.begin(), grids.end()) != grids.end())
    throw std::invalid_argument("converge: grid list must be strictly increasing");

  std::vector<double> hs, errs;
  std::vector<std::vector<double>> rows;
  for (int n : grids) {
    Scenario scenario = scenario_from_config(config_with_n(config.scenario, n));
    if (!scenario.exact)
      throw std::invalid_argument(
          "converge: scenario has no exact solution to measure against");
    const SolveResult result = solve(scenario);
    hs.push_back(scenario.grid->hx());
    errs.push_back(*result.max_error);
    rows.push_back({static_cast<double>(n), scenario.grid->hx(),
                    *result.max_error});
  }
  const double order = fit_order(hs, errs);

  Assertions asserts;
  asserts.check("solver_order_lo", order >= tol.solver_order_lo, order,
                tol.solver_order_lo);
  asserts.check("solver_order_hi", order <= tol.solver_order_hi, order,
                tol.solver_order_hi);

  json report = base_report(config, tol);
  report["results"]["order"] = order;
  report["results"]["grids"] = grids;
  report["results"]["errors"] = errs;
  report["assertions"] = asserts.list;
  if (!config.out_dir.empty()) {
    write_csv((fs::path(config.out_dir) / "converge.csv").string(),
              {"n", "h", "max_error"}, rows);
    write_report(config.out_dir, report);
  }
  out.report = report;
  out.failures = asserts.failures;
  out.exit_code = asserts.all_pass() ? 0 : 2;
  return out;
}

RunOutcome run_verify(const RunConfig& config, const Tolerances& tol) {
  RunOutcome out;
  Assertions asserts;
  json report = base_report(config, tol);
  auto& res = report["results"];

  const std::string which = config.identities.empty() ? "all"
                                                      : config.identities;
  auto enabled = [&](const char* name) {
    return which == "all" || which == name;
  };
  std::vector<int> grids = config.grids;
  if (grids.empty()) grids = {65, 129, 257};

  if (enabled("uu") || enabled("uu3") || enabled("flux") ||
      enabled("multiplier")) {
    std::vector<double> hs;
    std::vector<double> r_uu, r_uu3, r_flux, r_mult;
    double e0_finest = 1.0;
    for (int n : grids) {
      Scenario scenario =
          scenario_from_config(config_with_n(config.scenario, n));
      const SolveResult result = solve(scenario);
      const auto& grid = *scenario.grid;
      hs.push_back(grid.hx());
      const Hypersurface surface =
          pick_surface(config, config.scenario, grid);
      e0_finest = initial_energy(grid, scenario.A, scenario.initial);

      if (enabled("uu"))
        r_uu.push_back(sweep_energy_identity(result.u, scenario.A).max_residual);
      if (enabled("uu3") || enabled("multiplier")) {
        const MultiplierField phi = extend_multiplier(scenario.A, grid);
        if (enabled("uu3"))
          r_uu3.push_back(
              sweep_multiplier_identity(result.u, scenario.A, phi)
                  .max_residual);
        if (enabled("multiplier"))
          r_mult.push_back(std::abs(
              multiplier_balance(result, scenario, surface, phi, 0.0)
                  .residual));
      }
      if (enabled("flux"))
        r_flux.push_back(
            std::abs(flux_balance(result, scenario, surface, 0.0).residual));
    }
    auto record = [&](const char* name, const std::vector<double>& r) {
      if (r.empty()) return;
      res[name]["residuals"] = r;
      res[name]["h"] = hs;
      if (r.size() >= 3) {
        const double order = fit_order(hs, r);
        res[name]["order"] = order;
        asserts.check(std::string(name) + "_order", order >= tol.order_min,
                      order, tol.order_min);
      }
    };
    record("uu", r_uu);
    record("uu3", r_uu3);
    record("flux", r_flux);
    record("multiplier", r_mult);
    if (enabled("flux") && !r_flux.empty()) {
      const double rel = r_flux.back() / std::max(e0_finest, 1e-300);
      asserts.check("flux_rel_finest", rel <= tol.flux_rel, rel, tol.flux_rel);
    }
  }

  if (enabled("decomp")) {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst_product = 0.0;
    double worst_expansion = 0.0;
    for (int sample = 0; sample < 100; ++sample) {
      // Random SPD 2x2 and a random rotated orthonormal frame.
      double m11 = unit(rng), m12 = unit(rng), m21 = unit(rng),
             m22 = unit(rng);
      std::vector<double> a = {m11 * m11 + m21 * m21 + 0.1,
                               m11 * m12 + m21 * m22,
                               m11 * m12 + m21 * m22,
                               m12 * m12 + m22 * m22 + 0.1};
      const double theta = 3.14159265358979323846 * unit(rng);
      const std::vector<double> frame = {std::cos(theta), std::sin(theta),
                                         -std::sin(theta), std::cos(theta)};
      std::vector<std::vector<Complex>> gradients;
      for (int g = 0; g < 10; ++g)
        gradients.push_back(
            {Complex{unit(rng), unit(rng)}, Complex{unit(rng), unit(rng)}});
      const auto dec = gradient_decomposition(a, frame, 2, gradients);
      worst_product = std::max(worst_product, std::abs(dec.product - 1.0));
      worst_expansion = std::max(worst_expansion, dec.expansion_max_err);
    }
    res["decomp"]["max_product_error"] = worst_product;
    res["decomp"]["max_expansion_error"] = worst_expansion;
    asserts.check("decomp_product", worst_product <= tol.decomp, worst_product,
                  tol.decomp);
    asserts.check("decomp_expansion", worst_expansion <= tol.decomp,
                  worst_expansion, tol.decomp);

    // Closed-form circle decomposition (A = I).
    CirclePointSample sample;
    sample.u = [](Vec x) { return Complex{x.x * x.y, 0.0}; };
    sample.du_dx = [](Vec x) { return Complex{x.y, 0.0}; };
    sample.du_dy = [](Vec x) { return Complex{x.x, 0.0}; };
    const double circle = sphere_decomposition_check(sample, 16);
    res["decomp"]["circle_residual"] = circle;
    asserts.check("decomp_circle", circle <= tol.poly_exact, circle,
                  tol.poly_exact);
  }

  if (enabled("gronwall")) {
    const std::vector<double> ds = {0.1, 1.0, 10.0};
    std::vector<double> values;
    for (double d : ds) {
      const auto g = gronwall_coefficient_min(d);
      values.push_back(g.value);
      res["gronwall"]["k_star_over_d"] = g.k_star / d;
    }
    res["gronwall"]["d"] = ds;
    res["gronwall"]["values"] = values;
    const double spread =
        *std::max_element(values.begin(), values.end()) -
        *std::min_element(values.begin(), values.end());
    asserts.check("gronwall_bracket_low", values[1] > 3.5, values[1], 3.5);
    asserts.check("gronwall_bracket_high", values[1] < 4.0, values[1], 4.0);
    asserts.check("gronwall_d_invariance", spread <= tol.gronwall_invariance,
                  spread, tol.gronwall_invariance);
  }

  report["assertions"] = asserts.list;
  out.failures = asserts.failures;
  out.exit_code = asserts.all_pass() ? 0 : 2;
  if (!config.out_dir.empty()) write_report(config.out_dir, report);
  out.report = report;
  return out;
}

RunOutcome run_compat(const RunConfig& config, const Tolerances& tol) {
  RunOutcome out;
  Scenario scenario = scenario_from_config(config.scenario);
  const auto& grid = *scenario.grid;
  const int K = config.compat_order > 0 ? config.compat_order
                                        : default_compat_order(grid.dim());

  const CompatHierarchy hierarchy = build_hierarchy(
      scenario.initial.u0, scenario.initial.u1, scenario.source, scenario.A,
      K);

  // Sample f on the boundary with the solver's level grid.
  const double dt_max = scenario.cfl_dt_max();
  const double T = scenario.time_horizon();
  const int steps = std::max(2, static_cast<int>(std::ceil(T / dt_max)));
  const double dt = T / steps;
  BoundaryField f(grid, steps + 1, dt);
  for (int level = 0; level <= steps; ++level) {
    for (std::size_t b = 0; b < grid.boundary_nodes().size(); ++b) {
      f.at(level, static_cast<int>(b)) = scenario.boundary_value(
          grid.boundary_nodes()[b], level * dt);
    }
  }

  Assertions asserts;
  json report = base_report(config, tol);
  auto& res = report["results"];
  res["order"] = K;

  double scale = 1.0;
  for (const auto& uk : hierarchy.u)
    for (const auto& v : uk) scale = std::max(scale, std::abs(v));

  std::vector<std::vector<double>> rows;
  double previous = std::numeric_limits<double>::infinity();
  bool monotone = true;
  bool tails_exact = true;
  double worst_residual = 0.0;
  for (double eps : config.eps_sweep) {
    const MollifiedBoundary f_eps = mollify_high_order(f, hierarchy, eps);
    for (int k = 0; k <= K; ++k)
      worst_residual =
          std::max(worst_residual, compatibility_residual(f_eps, hierarchy, k));
    for (int level = 0; level <= steps; ++level) {
      if (level * dt < 2.0 * eps) continue;
      for (int b = 0; b < f.num_boundary_nodes(); ++b)
        if (f_eps.values.at(level, b) != f.at(level, b)) tails_exact = false;
    }
    const double dist =
        std::sqrt(h1_sigma_distance_sq(f_eps.values, f));
    if (dist > previous + 1e-14) monotone = false;
    previous = dist;
    rows.push_back({eps, dist, worst_residual});
  }

  res["h1_distances"] = json::array();
  for (const auto& row : rows) res["h1_distances"].push_back(row[1]);
  res["max_compat_residual"] = worst_residual;
  asserts.check("compat_residuals", worst_residual <= tol.compat_residual * scale,
                worst_residual, tol.compat_residual * scale);
  asserts.check("h1_distance_monotone", monotone, monotone ? 1.0 : 0.0, 1.0);
  asserts.check("tail_bit_exact", tails_exact, tails_exact ? 1.0 : 0.0, 1.0);

  report["assertions"] = asserts.list;
  if (!config.out_dir.empty()) {
    write_csv((fs::path(config.out_dir) / "eps_sweep.csv").string(),
              {"eps", "h1_distance", "max_order_residual"}, rows);
    write_report(config.out_dir, report);
  }
  out.report = report;
  out.failures = asserts.failures;
  out.exit_code = asserts.all_pass() ? 0 : 2;
  return out;
}

RunOutcome run_lorentz(const RunConfig& config, const Tolerances& tol) {
  RunOutcome out;
  if (std::abs(config.lorentz_v) >= 1.0)
    throw std::invalid_argument("lorentz: |v| must be < 1");
  std::vector<int> grids = config.grids;
  if (grids.empty()) grids = {257, 513, 1025};

  Assertions asserts;
  json report = base_report(config, tol);
  auto& res = report["results"];
  res["v"] = config.lorentz_v;

  std::vector<double> hs, residuals;
  json per_grid = json::array();
  for (int n : grids) {
    const LorentzReport lr = lorentz_scenario(config.lorentz_v, n);
    hs.push_back(4.4 / (n - 1));
    residuals.push_back(lr.residual_sup);
    per_grid.push_back(json{{"n", n},
                            {"residual_sup", lr.residual_sup},
                            {"h1_slanted", lr.h1_slanted},
                            {"h1_boosted", lr.h1_boosted},
                            {"ratio", lr.ratio},
                            {"expected_ratio", lr.expected_ratio}});
  }
  res["per_grid"] = per_grid;

  if (std::abs(config.lorentz_v) < 1e-15) {
    const double worst =
        *std::max_element(residuals.begin(), residuals.end());
    asserts.check("lorentz_zero_residual", worst <= tol.lorentz_zero, worst,
                  tol.lorentz_zero);
  } else if (residuals.size() >= 3) {
    const double order = fit_order(hs, residuals);
    res["order"] = order;
    asserts.check("lorentz_order", order >= tol.lorentz_order, order,
                  tol.lorentz_order);
  }

  report["assertions"] = asserts.list;
  if (!config.out_dir.empty()) write_report(config.out_dir, report);
  out.report = report;
  out.failures = asserts.failures;
  out.exit_code = asserts.all_pass() ? 0 : 2;
  return out;
}

RunOutcome run_tau_sweep(const RunConfig& config, const Tolerances& tol) {
  RunOutcome out;
  Scenario scenario = scenario_from_config(config.scenario);
  const SolveResult result = solve(scenario);
  const auto& grid = *scenario.grid;

  json foliation_spec = config.foliation;
  if (foliation_spec.is_null() && config.scenario.contains("foliation"))
    foliation_spec = config.scenario.at("foliation");
  if (foliation_spec.is_null())
    foliation_spec = json{{"family", "horizontal"}};

  const double tau_max =
      foliation_spec.value("tau_max", scenario.time_horizon());
  const auto taus = linspace(0.0, tau_max, std::max(config.tau_grid, 2));
  const auto family = foliation_from_config(foliation_spec, grid, taus);

  const auto check = validate_foliation(family);
  if (!check.ok) {
    const auto& v = *check.violation;
    json report = base_report(config, tol);
    report["results"]["foliation_violation"] = {
        {"pair", {v.pair_lo, v.pair_hi}},
        {"node", v.node},
        {"s_lo", v.s_lo},
        {"s_hi", v.s_hi}};
    Assertions asserts;
    asserts.check("foliation_monotone", false, 0.0, 1.0);
    report["assertions"] = asserts.list;
    if (!config.out_dir.empty()) write_report(config.out_dir, report);
    out.report = report;
    out.failures = asserts.failures;
    out.exit_code = 2;
    return out;
  }

  const Hypersurface primary = pick_surface(config, config.scenario, grid);
  const double e0 = initial_energy(grid, scenario.A, scenario.initial);
  const EnergyReport er = theorem_reports(scenario, result, primary);

  Assertions asserts;
  std::vector<std::vector<double>> rows;
  double worst_dev = 0.0;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const double tau = taus[k];
    const double e_partial =
        partial_energy(result.u, primary, scenario.A, tau);
    const double e_member =
        partial_energy(result.u, family[k], scenario.A, 0.0);
    const double e_h = horizontal_energy(result.u, scenario.A, primary, tau);
    std::vector<double> row = {tau, e_partial, e_member, e_h};
    if (er.zero_data) {
      const double dev = std::abs(e_member - e0);
      worst_dev = std::max(worst_dev, dev);
      row.push_back(dev);
    }
    rows.push_back(std::move(row));
  }
  if (er.zero_data) {
    const double rel = worst_dev / std::max(e0, 1e-300);
    asserts.check("foliation_conservation", rel <= tol.conservation_rel, rel,
                  tol.conservation_rel);
  }

  json report = base_report(config, tol);
  report["results"]["taus"] = taus;
  report["results"]["zero_data"] = er.zero_data;
  report["assertions"] = asserts.list;
  if (!config.out_dir.empty()) {
    std::vector<std::string> header = {"tau", "e_partial", "e_surface_tau",
                                       "e_horizontal"};
    if (er.zero_data) header.push_back("conservation_dev");
    write_csv((fs::path(config.out_dir) / "tau_sweep.csv").string(), header,
              rows);
    write_report(config.out_dir, report);
  }
  out.report = report;
  out.failures = asserts.failures;
  out.exit_code = asserts.all_pass() ? 0 : 2;
  return out;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  const Tolerances tol = Tolerances::with_overrides(config.tol);
  if (config.kind == "solve") return run_solve(config, tol);
  if (config.kind == "energy") return run_energy(config, tol);
  if (config.kind == "verify") return run_verify(config, tol);
  if (config.kind == "compat") return run_compat(config, tol);
  if (config.kind == "converge") return run_converge(config, tol);
  if (config.kind == "lorentz") return run_lorentz(config, tol);
  if (config.kind == "tau-sweep") return run_tau_sweep(config, tol);
  throw std::invalid_argument("unknown experiment kind '" + config.kind + "'");
}

}  // namespace slantwave
