#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slantwave/geometry.hpp"
#include "slantwave/types.hpp"

namespace slantwave {

struct EllipticityBounds {
  double c1 = 1.0;
  double c2 = 1.0;
};

/// Symmetric coefficient field A(x) sampled per grid node. Analytic families
/// additionally provide point evaluation and the exact spatial derivatives
/// d A / d x_k used by the multiplier identity.
class CoefficientField {
 public:
  /// Empty field; assign from a factory before use.
  CoefficientField() = default;

  static CoefficientField identity(const SpatialGrid& grid);
  /// (c0 + c1 sin(pi k.x)) * I
  static CoefficientField scalar_sin(const SpatialGrid& grid, double c0,
                                     double c1, Vec k);
  static CoefficientField diagonal(const SpatialGrid& grid, double d1,
                                   double d2 = 1.0);
  /// R(theta) diag(l1(x1), l2(x1)) R(theta)^T with l_i(x1) = li0 + li1 sin(pi x1).
  static CoefficientField rotated_diagonal(const SpatialGrid& grid,
                                           double theta, double l10,
                                           double l11, double l20, double l21);
  static CoefficientField from_nodal(const SpatialGrid& grid,
                                     std::vector<SymMat> entries,
                                     std::string family = "nodal");

  const SpatialGrid& grid() const { return *grid_; }
  int dim() const { return grid_->dim(); }
  const std::string& family() const { return family_; }

  SymMat at(int node) const { return a_[node]; }
  /// Analytic evaluation at an arbitrary point; throws for nodal-only fields.
  SymMat at_point(Vec x) const;
  SymMat cell_average(int cell) const;
  /// Face value of the axis-aligned diagonal entry, the mean of the two
  /// adjacent nodes (keeps the discrete divergence symmetric).
  double face_diag(int axis, int node_lo, int node_hi) const;

  bool has_analytic_gradient() const { return static_cast<bool>(deriv_); }
  /// dA/dx_axis at a node, from the analytic descriptor.
  SymMat d_axis(int node, int axis) const;
  SymMat d_axis_at_point(Vec x, int axis) const;

  /// c1 = min over nodes of the smallest eigenvalue, c2 = max of the largest.
  EllipticityBounds ellipticity_bounds() const;

 private:
  void validate() const;

  const SpatialGrid* grid_ = nullptr;
  std::vector<SymMat> a_;
  std::string family_;
  std::function<SymMat(Vec)> eval_;
  std::function<SymMat(Vec, int)> deriv_;
};

/// |xi|_A^2 = conj(xi)^T A(node) xi.
double a_norm_sq(const CoefficientField& A, int node, CVec xi);
/// Checked variant: xi must carry exactly dim components.
double a_norm_sq(const CoefficientField& A, int node,
                 std::span<const Complex> xi);

}  // namespace slantwave
