#include "slantwave/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace slantwave {

double integrate_time_span(double t0, double t1, double dt, int n_levels,
                           const std::function<double(double)>& f) {
  if (t1 < t0) return 0.0;
  const double t_max = (n_levels - 1) * dt;
  t0 = std::max(t0, 0.0);
  t1 = std::min(t1, t_max);
  if (t1 - t0 < 1e-15) return 0.0;

  int first = static_cast<int>(std::ceil(t0 / dt - 1e-9));
  int last = static_cast<int>(std::floor(t1 / dt + 1e-9));
  first = std::max(first, 0);
  last = std::min(last, n_levels - 1);

  if (first > last) {
    // The whole span lives inside one level cell.
    return 0.5 * (t1 - t0) * (f(t0) + f(t1));
  }

  double sum = 0.0;
  const double t_first = first * dt;
  const double t_last = last * dt;
  if (t_first - t0 > 1e-14) sum += 0.5 * (t_first - t0) * (f(t0) + f(t_first));
  for (int k = first; k < last; ++k) {
    sum += 0.5 * dt * (f(k * dt) + f((k + 1) * dt));
  }
  if (t1 - t_last > 1e-14) sum += 0.5 * (t1 - t_last) * (f(t_last) + f(t1));
  return sum;
}

RegionIntegral integrate_q(const Hypersurface& surface,
                           const RegionMasks& masks,
                           const std::function<double(int, double)>& f) {
  RegionIntegral out;
  if (masks.empty) return out;
  const auto& grid = surface.grid();
  for (int node = 0; node < grid.num_nodes(); ++node) {
    const auto& col = masks.q_columns[node];
    if (col.empty) continue;
    out.empty = false;
    auto g = [&](double t) { return f(node, t); };
    out.value += grid.trapezoid_weight(node) *
                 integrate_time_span(col.t_lo, col.t_hi, masks.dt,
                                     masks.n_levels, g);
  }
  return out;
}

RegionIntegral integrate_sigma(const Hypersurface& surface,
                               const RegionMasks& masks,
                               const std::function<double(int, double)>& f) {
  RegionIntegral out;
  if (masks.empty) return out;
  const auto& grid = surface.grid();
  // Iterate faces so every node carries the right face measure; corner nodes
  // in 2D contribute once per adjoining face.
  for (const auto& face : grid.faces()) {
    for (std::size_t p = 0; p < face.nodes.size(); ++p) {
      const int node = face.nodes[p];
      const double s = surface.value(node);
      if (s < masks.tau - 1e-14) continue;
      out.empty = false;
      auto g = [&](double t) { return f(node, t); };
      out.value += grid.face_weight(face, static_cast<int>(p)) *
                   integrate_time_span(masks.tau, s, masks.dt, masks.n_levels,
                                       g);
    }
  }
  return out;
}

RegionIntegral integrate_sigma_faces(
    const Hypersurface& surface, const RegionMasks& masks,
    const std::function<double(const SpatialGrid::Face&, int, int, double)>&
        f) {
  RegionIntegral out;
  if (masks.empty) return out;
  const auto& grid = surface.grid();
  for (const auto& face : grid.faces()) {
    for (std::size_t p = 0; p < face.nodes.size(); ++p) {
      const int node = face.nodes[p];
      const double s = surface.value(node);
      if (s < masks.tau - 1e-14) continue;
      out.empty = false;
      const int pos = static_cast<int>(p);
      auto g = [&](double t) { return f(face, pos, node, t); };
      out.value += grid.face_weight(face, pos) *
                   integrate_time_span(masks.tau, s, masks.dt, masks.n_levels,
                                       g);
    }
  }
  return out;
}

RegionIntegral integrate_above_level(const Hypersurface& surface, double tau,
                                     const std::function<double(int)>& nodal) {
  RegionIntegral out;
  const auto& grid = surface.grid();
  if (tau > surface.t2() + 1e-14) return out;

  if (grid.dim() == 1) {
    const double h = grid.hx();
    for (int c = 0; c < grid.num_cells(); ++c) {
      const int a = c;
      const int b = c + 1;
      const double sa = surface.value(a);
      const double sb = surface.value(b);
      const bool ina = sa >= tau - 1e-14;
      const bool inb = sb >= tau - 1e-14;
      if (!ina && !inb) continue;
      out.empty = false;
      if (ina && inb) {
        out.value += 0.5 * h * (nodal(a) + nodal(b));
        continue;
      }
      // S crosses tau inside the cell: keep the sub-interval where S >= tau.
      const double frac = (tau - sa) / (sb - sa);
      const double fa = nodal(a);
      const double fb = nodal(b);
      const double fcross = fa + frac * (fb - fa);
      if (ina) {
        out.value += 0.5 * (frac * h) * (fa + fcross);
      } else {
        out.value += 0.5 * ((1.0 - frac) * h) * (fcross + fb);
      }
    }
    return out;
  }

  for (int node = 0; node < grid.num_nodes(); ++node) {
    if (surface.value(node) < tau - 1e-14) continue;
    out.empty = false;
    out.value += grid.trapezoid_weight(node) * nodal(node);
  }
  return out;
}

double integrate_omega(const SpatialGrid& grid,
                       const std::function<double(int)>& nodal) {
  double sum = 0.0;
  for (int node = 0; node < grid.num_nodes(); ++node)
    sum += grid.trapezoid_weight(node) * nodal(node);
  return sum;
}

RegionIntegral l2_region_sq(const SpaceTimeField& field,
                            const Hypersurface& surface,
                            const RegionMasks& masks, RegionTag tag) {
  switch (tag) {
    case RegionTag::Q:
      return integrate_q(surface, masks, [&](int node, double t) {
        return std::norm(interp_time(field, node, t).u);
      });
    case RegionTag::Sigma:
      return integrate_sigma(surface, masks, [&](int node, double t) {
        return std::norm(interp_time(field, node, t).u);
      });
    case RegionTag::H:
      return integrate_above_level(surface, masks.tau, [&](int node) {
        return std::norm(interp_time(field, node, masks.tau).u);
      });
    case RegionTag::Gamma:
      return integrate_above_level(surface, masks.tau, [&](int node) {
        return std::norm(interp_time(field, node, surface.value(node)).u);
      });
  }
  return {};
}

}  // namespace slantwave
