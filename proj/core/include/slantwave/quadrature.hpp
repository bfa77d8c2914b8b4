#pragma once

#include <functional>

#include "slantwave/fields.hpp"
#include "slantwave/geometry.hpp"

namespace slantwave {

struct RegionIntegral {
  double value = 0.0;
  bool empty = true;
};

/// Trapezoid integral of f(t) over [t0, t1] on a level grid of spacing dt,
/// including the partial cells at both ends (f is evaluated at the exact
/// endpoints). Exact for f constant on [t0, t1].
double integrate_time_span(double t0, double t1, double dt, int n_levels,
                           const std::function<double(double)>& f);

/// Integral over Q_tau = {(x,t): tau <= t <= S(x)}: per-node time columns
/// weighted by the tensor trapezoid rule in x.
RegionIntegral integrate_q(const Hypersurface& surface,
                           const RegionMasks& masks,
                           const std::function<double(int, double)>& f);

/// Integral over Sigma_tau: boundary columns weighted by the face measure
/// (counting measure in 1D, arc-length trapezoid in 2D). The integrand gets
/// (grid node index, t).
RegionIntegral integrate_sigma(const Hypersurface& surface,
                               const RegionMasks& masks,
                               const std::function<double(int, double)>& f);

/// Sigma_tau integral whose integrand needs the face (for the outward
/// normal): f receives (face, position within face, grid node, t).
RegionIntegral integrate_sigma_faces(
    const Hypersurface& surface, const RegionMasks& masks,
    const std::function<double(const SpatialGrid::Face&, int, int, double)>&
        f);

/// Integral over {x : S(x) >= tau} of a nodal integrand, trapezoid in x.
/// In 1D the crossing points where S(x) = tau are located inside cells and
/// the partial cells are included (linear interpolation of the integrand);
/// in 2D the node mask decides with plain trapezoid weights.
RegionIntegral integrate_above_level(const Hypersurface& surface, double tau,
                                     const std::function<double(int)>& nodal);

/// Plain trapezoid integral of a nodal integrand over the full domain.
double integrate_omega(const SpatialGrid& grid,
                       const std::function<double(int)>& nodal);

enum class RegionTag { Q, Sigma, H, Gamma };

/// Squared L2 norm of a field over the tagged region. H and Gamma evaluate
/// the field at t = tau and t = S(x) respectively via time interpolation.
RegionIntegral l2_region_sq(const SpaceTimeField& field,
                            const Hypersurface& surface,
                            const RegionMasks& masks, RegionTag tag);

}  // namespace slantwave
