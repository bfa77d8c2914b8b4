#include "slantwave/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slantwave {

SpaceTimeField::SpaceTimeField(const SpatialGrid& grid, int n_levels,
                               double dt)
    : grid_(&grid),
      n_levels_(n_levels),
      stride_(grid.num_nodes()),
      dt_(dt),
      v_(static_cast<std::size_t>(n_levels) * grid.num_nodes()) {
  if (n_levels < 3)
    throw std::invalid_argument("SpaceTimeField: need >= 3 time levels");
}

BoundaryField::BoundaryField(const SpatialGrid& grid, int n_levels, double dt)
    : grid_(&grid),
      n_levels_(n_levels),
      stride_(static_cast<int>(grid.boundary_nodes().size())),
      dt_(dt),
      v_(static_cast<std::size_t>(n_levels) * stride_) {}

double compatibility_mismatch(const SpatialGrid& grid, const InitialData& data,
                              const BoundaryField& f) {
  double worst = 0.0;
  const auto& bnodes = grid.boundary_nodes();
  for (std::size_t b = 0; b < bnodes.size(); ++b) {
    worst = std::max(worst, std::abs(data.u0[bnodes[b]] -
                                     f.at(0, static_cast<int>(b))));
  }
  return worst;
}

namespace {

// One-dimensional 3-point first derivative along an axis line.
template <typename At>
Complex d1_axis(const At& value, int i, int count, double h) {
  if (i > 0 && i < count - 1)
    return (value(i + 1) - value(i - 1)) / (2.0 * h);
  if (i == 0)
    return (-3.0 * value(0) + 4.0 * value(1) - value(2)) / (2.0 * h);
  return (3.0 * value(count - 1) - 4.0 * value(count - 2) + value(count - 3)) /
         (2.0 * h);
}

}  // namespace

Complex nodal_grad_axis(const SpatialGrid& grid, std::span<const Complex> v,
                        int node, int axis) {
  const int i = grid.ix(node);
  const int j = grid.iy(node);
  if (axis == 0) {
    auto value = [&](int k) { return v[grid.index(k, j)]; };
    return d1_axis(value, i, grid.nx(), grid.hx());
  }
  auto value = [&](int k) { return v[grid.index(i, k)]; };
  return d1_axis(value, j, grid.ny(), grid.hy());
}

CVec nodal_grad(const SpatialGrid& grid, std::span<const Complex> v,
                int node) {
  CVec g;
  g.x = nodal_grad_axis(grid, v, node, 0);
  if (grid.dim() == 2) g.y = nodal_grad_axis(grid, v, node, 1);
  return g;
}

Complex grad_axis(const SpaceTimeField& f, int level, int node, int axis) {
  return nodal_grad_axis(f.grid(), f.level_view(level), node, axis);
}

CVec grad(const SpaceTimeField& f, int level, int node) {
  return nodal_grad(f.grid(), f.level_view(level), node);
}

namespace {

Complex div_a_grad_impl(const CoefficientField& A, const SpatialGrid& grid,
                        std::span<const Complex> v, int node) {
  const int i = grid.ix(node);
  const int j = grid.iy(node);
  if (i <= 0 || i >= grid.nx() - 1 ||
      (grid.dim() == 2 && (j <= 0 || j >= grid.ny() - 1)))
    throw std::out_of_range("div_a_grad: interior node required");

  Complex out{};
  {
    const int lo = grid.index(i - 1, j);
    const int hi = grid.index(i + 1, j);
    const double ap = A.face_diag(0, node, hi);
    const double am = A.face_diag(0, lo, node);
    out += (ap * (v[hi] - v[node]) - am * (v[node] - v[lo])) /
           (grid.hx() * grid.hx());
  }
  if (grid.dim() == 2) {
    const int lo = grid.index(i, j - 1);
    const int hi = grid.index(i, j + 1);
    const double ap = A.face_diag(1, node, hi);
    const double am = A.face_diag(1, lo, node);
    out += (ap * (v[hi] - v[node]) - am * (v[node] - v[lo])) /
           (grid.hy() * grid.hy());

    // Cross terms d_1(a12 d_2 u) + d_2(a12 d_1 u), centered compositions.
    auto a12 = [&](int ii, int jj) { return A.at(grid.index(ii, jj)).a12; };
    bool any_cross = a12(i - 1, j) != 0.0 || a12(i + 1, j) != 0.0 ||
                     a12(i, j - 1) != 0.0 || a12(i, j + 1) != 0.0;
    if (any_cross) {
      auto d2u = [&](int ii, int jj) {
        auto value = [&](int k) { return v[grid.index(ii, k)]; };
        return d1_axis(value, jj, grid.ny(), grid.hy());
      };
      auto d1u = [&](int ii, int jj) {
        auto value = [&](int k) { return v[grid.index(k, jj)]; };
        return d1_axis(value, ii, grid.nx(), grid.hx());
      };
      out += (a12(i + 1, j) * d2u(i + 1, j) - a12(i - 1, j) * d2u(i - 1, j)) /
             (2.0 * grid.hx());
      out += (a12(i, j + 1) * d1u(i, j + 1) - a12(i, j - 1) * d1u(i, j - 1)) /
             (2.0 * grid.hy());
    }
  }
  return out;
}

}  // namespace

Complex div_a_grad(const CoefficientField& A, const SpaceTimeField& f,
                   int level, int node) {
  return div_a_grad_impl(A, f.grid(), f.level_view(level), node);
}

Complex nodal_div_a_grad(const CoefficientField& A, const SpatialGrid& grid,
                         std::span<const Complex> v, int node) {
  return div_a_grad_impl(A, grid, v, node);
}

Complex nodal_div_a_grad_onesided(const CoefficientField& A,
                                  const SpatialGrid& grid,
                                  std::span<const Complex> v, int node) {
  if (!grid.on_boundary(node)) return div_a_grad_impl(A, grid, v, node);
  // Differentiate w_k = a_kk du/dx_k once more with one-sided stencils.
  const int i = grid.ix(node);
  const int j = grid.iy(node);
  Complex out{};
  for (int axis = 0; axis < grid.dim(); ++axis) {
    auto w = [&](int k) {
      const int n = axis == 0 ? grid.index(k, j) : grid.index(i, k);
      const double a = axis == 0 ? A.at(n).a11 : A.at(n).a22;
      return a * nodal_grad_axis(grid, v, n, axis);
    };
    const int pos = axis == 0 ? i : j;
    const int count = axis == 0 ? grid.nx() : grid.ny();
    out += d1_axis(w, pos, count, grid.h(axis));
  }
  if (grid.dim() == 2) {
    auto wx = [&](int k) {
      const int n = grid.index(k, j);
      return A.at(n).a12 * nodal_grad_axis(grid, v, n, 1);
    };
    auto wy = [&](int k) {
      const int n = grid.index(i, k);
      return A.at(n).a12 * nodal_grad_axis(grid, v, n, 0);
    };
    out += d1_axis(wx, i, grid.nx(), grid.hx());
    out += d1_axis(wy, j, grid.ny(), grid.hy());
  }
  return out;
}

CVec grad_at_time(const SpaceTimeField& f, int node, double t) {
  const auto& grid = f.grid();
  const int i = grid.ix(node);
  const int j = grid.iy(node);
  CVec g;
  {
    auto value = [&](int k) { return interp_time(f, grid.index(k, j), t).u; };
    g.x = d1_axis(value, i, grid.nx(), grid.hx());
  }
  if (grid.dim() == 2) {
    auto value = [&](int k) { return interp_time(f, grid.index(i, k), t).u; };
    g.y = d1_axis(value, j, grid.ny(), grid.hy());
  }
  return g;
}

TimeInterp interp_time(const SpaceTimeField& f, int node, double t) {
  const double dt = f.dt();
  const double t_max = f.t_final();
  if (t < -1e-12 || t > t_max + 1e-12)
    throw std::out_of_range("interp_time: t outside stored span");
  t = std::clamp(t, 0.0, t_max);

  // Three nearest levels around t.
  int k = static_cast<int>(std::lround(t / dt));
  k = std::clamp(k, 1, f.n_levels() - 2);
  const double t0 = (k - 1) * dt;
  const Complex f0 = f.at(k - 1, node);
  const Complex f1 = f.at(k, node);
  const Complex f2 = f.at(k + 1, node);
  const double s = (t - t0) / dt;  // in [~0, ~2]

  // Newton form of the parabola through (0, f0), (1, f1), (2, f2).
  const Complex d1 = f1 - f0;
  const Complex d2 = 0.5 * (f2 - 2.0 * f1 + f0);
  TimeInterp out;
  out.u = f0 + s * d1 + s * (s - 1.0) * d2;
  out.ut = (d1 + (2.0 * s - 1.0) * d2) / dt;
  return out;
}

}  // namespace slantwave
