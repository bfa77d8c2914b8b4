#include "slantwave/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace slantwave {

AnalyticField zero_field() {
  AnalyticField f;
  f.value = [](Vec, double) { return Complex{}; };
  f.dt = [](Vec, double) { return Complex{}; };
  f.grad = [](Vec, double) { return CVec{}; };
  f.dt_k_at0 = [](Vec, int) { return Complex{}; };
  return f;
}

double Scenario::cfl_dt_max() const {
  const auto bounds = A.ellipticity_bounds();
  double inv_h2 = 1.0 / (grid->hx() * grid->hx());
  if (grid->dim() == 2) inv_h2 += 1.0 / (grid->hy() * grid->hy());
  return cfl_safety / std::sqrt(bounds.c2 * inv_h2);
}

SolveResult solve(const Scenario& scenario) {
  const auto& grid = *scenario.grid;
  const double T = scenario.time_horizon();

  const double dt_max = scenario.cfl_dt_max();
  double dt;
  int steps;
  if (scenario.dt_override) {
    dt = *scenario.dt_override;
    if (dt > dt_max * (1.0 + 1e-12))
      throw std::runtime_error("solve: CFL violation, dt exceeds " +
                               std::to_string(dt_max));
    steps = static_cast<int>(std::ceil(T / dt - 1e-9));
    dt = T / steps;
  } else {
    steps = static_cast<int>(std::ceil(T / dt_max - 1e-9));
    steps = std::max(steps, 2);
    dt = T / steps;
  }

  if (scenario.initial.u0.size() != static_cast<std::size_t>(grid.num_nodes()))
    throw std::invalid_argument("solve: initial data size mismatch");

  // Order-zero compatibility between u0 and f.
  {
    double worst = 0.0;
    for (int node : grid.boundary_nodes()) {
      worst = std::max(worst, std::abs(scenario.initial.u0[node] -
                                       scenario.boundary_value(node, 0.0)));
    }
    if (worst > scenario.compat_tol)
      throw std::runtime_error(
          "solve: u0 != f(.,0) on the boundary (mismatch " +
          std::to_string(worst) + ")");
  }

  SolveResult result;
  result.dt = dt;
  result.steps = steps;
  result.u = SpaceTimeField(grid, steps + 1, dt);
  auto& u = result.u;
  u.set_initial_velocity(scenario.initial.u1);

  auto apply_boundary = [&](int level) {
    const double t = level * dt;
    for (int node : grid.boundary_nodes())
      u.at(level, node) = scenario.boundary_value(node, t);
  };
  auto is_interior = [&](int node) { return !grid.on_boundary(node); };

  for (int node = 0; node < grid.num_nodes(); ++node)
    u.at(0, node) = scenario.initial.u0[node];
  apply_boundary(0);

  // First step by Taylor expansion with the PDE's own acceleration.
  for (int node = 0; node < grid.num_nodes(); ++node) {
    if (!is_interior(node)) continue;
    const Complex acc = div_a_grad(scenario.A, u, 0, node) +
                        scenario.source_value(node, 0.0);
    u.at(1, node) = u.at(0, node) + dt * scenario.initial.u1[node] +
                    0.5 * dt * dt * acc;
  }
  apply_boundary(1);

  for (int level = 1; level < steps; ++level) {
    const double t = level * dt;
    for (int node = 0; node < grid.num_nodes(); ++node) {
      if (!is_interior(node)) continue;
      const Complex acc =
          div_a_grad(scenario.A, u, level, node) + scenario.source_value(node, t);
      u.at(level + 1, node) =
          2.0 * u.at(level, node) - u.at(level - 1, node) + dt * dt * acc;
    }
    apply_boundary(level + 1);

    double level_max = 0.0;
    for (int node = 0; node < grid.num_nodes(); ++node)
      level_max = std::max(level_max, std::abs(u.at(level + 1, node)));
    if (!std::isfinite(level_max))
      throw std::runtime_error("solve: NaN detected at level " +
                               std::to_string(level + 1));
  }

  if (scenario.exact) {
    double worst = 0.0;
    for (int level = 0; level <= steps; ++level) {
      const double t = level * dt;
      for (int node = 0; node < grid.num_nodes(); ++node) {
        worst = std::max(worst,
                         std::abs(u.at(level, node) -
                                  scenario.exact.value(grid.coord(node), t)));
      }
    }
    result.max_error = worst;
  }
  return result;
}

}  // namespace slantwave
