#pragma once

#include <memory>
#include <vector>

#include "slantwave/solver.hpp"

namespace slantwave {

/// Field resampled onto boosted coordinates; level 0 sits at t = t0.
struct ResampledField {
  std::shared_ptr<SpatialGrid> grid;
  double dt = 0.0;
  double t0 = 0.0;
  int n_levels = 0;

  Complex at(int level, int node) const {
    return values[static_cast<std::size_t>(level) * grid->num_nodes() + node];
  }
  std::vector<Complex> values;
};

/// Resamples u(x, t) onto boosted coordinates via
///   t = gamma (t~ + v x~), x = gamma (x~ + v t~)
/// over the window [x_lo, x_hi] x [t_lo, t_hi], snapped to the source grid's
/// spacings so the v = 0 boost is the identity on sample points. Space-time
/// interpolation is tensor cubic (Lagrange), keeping the wave-equation
/// residual of the resampled field at second order.
ResampledField boost_resample(const SpaceTimeField& u, double v, double x_lo,
                              double x_hi, double t_lo, double t_hi);

/// Sup of the discrete wave residual D_tt w - D_xx w over interior samples.
double wave_residual_sup(const ResampledField& w);

struct LorentzReport {
  double v = 0.0;
  double gamma = 1.0;
  double residual_sup = 0.0;
  double h1_slanted = 0.0;   // graph-norm of the trace on S(x) = t0 + v x
  double h1_boosted = 0.0;   // flat seminorm of the boosted horizontal slice
  double ratio = 0.0;        // h1_boosted / h1_slanted
  double expected_ratio = 0.0;  // gamma sqrt(1 + v^2)
  double plane_t0 = 0.0;
  int n = 0;
};

/// Free-space pulse experiment: solves on a wide 1D domain, boosts by v, and
/// reports the wave-equation residual of the boosted field plus the profile
/// norms on the matching slanted/horizontal planes.
LorentzReport lorentz_scenario(double v, int n);

}  // namespace slantwave
