#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "slantwave/coefficients.hpp"
#include "slantwave/fields.hpp"
#include "slantwave/geometry.hpp"

namespace slantwave {

/// Closed-form space-time scalar field with whatever derivatives the
/// descriptor can supply; absent members read as unavailable.
struct AnalyticField {
  std::function<Complex(Vec, double)> value;
  std::function<Complex(Vec, double)> dt;
  std::function<CVec(Vec, double)> grad;
  /// k-th time derivative at t = 0 (for the compatibility hierarchy).
  std::function<Complex(Vec, int)> dt_k_at0;

  explicit operator bool() const { return static_cast<bool>(value); }
};

AnalyticField zero_field();

/// One solvable problem instance. The grid is shared so that fields,
/// coefficient samples and surfaces built on it stay valid across copies.
struct Scenario {
  std::string name;
  std::shared_ptr<const SpatialGrid> grid;
  CoefficientField A;
  InitialData initial;
  AnalyticField boundary;        // Dirichlet datum f; null means zero
  AnalyticField source;          // G; null means zero
  AnalyticField exact;           // optional closed-form solution
  double cfl_safety = 0.9;
  double compat_tol = 1e-8;
  std::optional<double> dt_override;

  double time_horizon() const { return grid->domain().time_horizon; }
  Complex boundary_value(int node, double t) const {
    return boundary ? boundary.value(grid->coord(node), t) : Complex{};
  }
  Complex source_value(int node, double t) const {
    return source ? source.value(grid->coord(node), t) : Complex{};
  }
  /// Largest stable time step: cfl_safety / sqrt(c2 * sum_k h_k^-2).
  double cfl_dt_max() const;
};

struct SolveResult {
  SpaceTimeField u;
  double dt = 0.0;
  int steps = 0;
  /// Max-norm drift against the exact solution over all levels, when known.
  std::optional<double> max_error;
};

/// Explicit leapfrog integration of u_tt = div(A grad u) + G with Dirichlet
/// rows overwritten from f after every update.
SolveResult solve(const Scenario& scenario);

/// Registered manufactured-solution catalog: "standing", "variable-a",
/// "traveling", "gaussian-bump", "standing-2d". Parameters (all optional):
/// n (nodes per axis), t_final, phase, center, radius, amplitude.
Scenario manufactured(const std::string& name,
                      const std::function<double(const std::string&, double)>&
                          param = nullptr);

/// Convenience overload taking explicit overrides.
struct ManufacturedParams {
  int n = 129;
  double t_final = 1.0;
  double phase = 0.0;      // variable-a boundary phase
  double center = 0.5;     // gaussian-bump
  double radius = 0.2;
  double amplitude = 1.0;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
};
Scenario manufactured(const std::string& name, const ManufacturedParams& p);

}  // namespace slantwave
