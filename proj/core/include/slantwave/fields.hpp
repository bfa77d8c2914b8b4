#pragma once

#include <span>
#include <vector>

#include "slantwave/coefficients.hpp"
#include "slantwave/geometry.hpp"
#include "slantwave/types.hpp"

namespace slantwave {

/// Complex grid function over (time level, spatial node). Written only by the
/// solver during time-stepping; frozen afterwards for concurrent reads.
class SpaceTimeField {
 public:
  SpaceTimeField() = default;
  SpaceTimeField(const SpatialGrid& grid, int n_levels, double dt);

  const SpatialGrid& grid() const { return *grid_; }
  int n_levels() const { return n_levels_; }
  double dt() const { return dt_; }
  double t_final() const { return (n_levels_ - 1) * dt_; }

  Complex at(int level, int node) const {
    return v_[static_cast<std::size_t>(level) * stride_ + node];
  }
  Complex& at(int level, int node) {
    return v_[static_cast<std::size_t>(level) * stride_ + node];
  }
  std::span<const Complex> level_view(int level) const {
    return {v_.data() + static_cast<std::size_t>(level) * stride_,
            static_cast<std::size_t>(stride_)};
  }
  std::span<Complex> level_view(int level) {
    return {v_.data() + static_cast<std::size_t>(level) * stride_,
            static_cast<std::size_t>(stride_)};
  }

  /// Initial velocity, when the producer recorded it (used by diagnostics at
  /// t = 0 where a centered time stencil does not exist).
  bool has_initial_velocity() const { return !u1_.empty(); }
  std::span<const Complex> initial_velocity() const { return u1_; }
  void set_initial_velocity(std::vector<Complex> u1) { u1_ = std::move(u1); }

 private:
  const SpatialGrid* grid_ = nullptr;
  int n_levels_ = 0;
  int stride_ = 0;
  double dt_ = 0.0;
  std::vector<Complex> v_;
  std::vector<Complex> u1_;
};

/// Complex values over (boundary node, time level); represents f on Sigma.
/// Nodes follow grid.boundary_nodes() order.
class BoundaryField {
 public:
  BoundaryField() = default;
  BoundaryField(const SpatialGrid& grid, int n_levels, double dt);

  const SpatialGrid& grid() const { return *grid_; }
  int n_levels() const { return n_levels_; }
  double dt() const { return dt_; }
  int num_boundary_nodes() const { return stride_; }

  Complex at(int level, int bindex) const {
    return v_[static_cast<std::size_t>(level) * stride_ + bindex];
  }
  Complex& at(int level, int bindex) {
    return v_[static_cast<std::size_t>(level) * stride_ + bindex];
  }

 private:
  const SpatialGrid* grid_ = nullptr;
  int n_levels_ = 0;
  int stride_ = 0;
  double dt_ = 0.0;
  std::vector<Complex> v_;
};

struct InitialData {
  std::vector<Complex> u0;
  std::vector<Complex> u1;
};

/// Maximum boundary mismatch |u0 - f(., 0)|; order-zero compatibility check.
double compatibility_mismatch(const SpatialGrid& grid, const InitialData& data,
                              const BoundaryField& f);

// --- Finite-difference stencils (second order) ------------------------------

/// d u / d x_axis at a node: centered in the interior, one-sided second order
/// at the domain boundary.
Complex grad_axis(const SpaceTimeField& f, int level, int node, int axis);
CVec grad(const SpaceTimeField& f, int level, int node);

/// Same stencils applied to a plain nodal array.
Complex nodal_grad_axis(const SpatialGrid& grid, std::span<const Complex> v,
                        int node, int axis);
CVec nodal_grad(const SpatialGrid& grid, std::span<const Complex> v, int node);

/// div(A grad u) at an interior node, flux form with face-averaged diagonal
/// entries plus centered cross terms for full-matrix A.
Complex div_a_grad(const CoefficientField& A, const SpaceTimeField& f,
                   int level, int node);
Complex nodal_div_a_grad(const CoefficientField& A, const SpatialGrid& grid,
                         std::span<const Complex> v, int node);
/// One-sided variant usable at boundary nodes (first-order there).
Complex nodal_div_a_grad_onesided(const CoefficientField& A,
                                  const SpatialGrid& grid,
                                  std::span<const Complex> v, int node);

// --- Time interpolation ------------------------------------------------------

struct TimeInterp {
  Complex u{};
  Complex ut{};
};

/// Quadratic interpolation through the three nearest levels; exact for fields
/// quadratic in t. The derivative is the interpolant's derivative.
TimeInterp interp_time(const SpaceTimeField& f, int node, double t);

/// Spatial gradient at an off-level time: spatial stencils applied to
/// time-interpolated neighbor columns.
CVec grad_at_time(const SpaceTimeField& f, int node, double t);

}  // namespace slantwave
