#include "slantwave/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace slantwave {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void CoefficientField::validate() const {
  for (std::size_t node = 0; node < a_.size(); ++node) {
    if (a_[node].min_eigenvalue() <= 0.0)
      throw std::invalid_argument(
          "CoefficientField: non-positive eigenvalue at node " +
          std::to_string(node));
  }
}

CoefficientField CoefficientField::identity(const SpatialGrid& grid) {
  CoefficientField f;
  f.grid_ = &grid;
  f.family_ = "identity";
  f.a_.assign(grid.num_nodes(), SymMat{grid.dim(), 1.0, 0.0, 1.0});
  const int d = grid.dim();
  f.eval_ = [d](Vec) { return SymMat{d, 1.0, 0.0, 1.0}; };
  f.deriv_ = [d](Vec, int) { return SymMat{d, 0.0, 0.0, 0.0}; };
  return f;
}

CoefficientField CoefficientField::scalar_sin(const SpatialGrid& grid,
                                              double c0, double c1, Vec k) {
  CoefficientField f;
  f.grid_ = &grid;
  f.family_ = "scalar-sin";
  const int d = grid.dim();
  auto value = [c0, c1, k, d](Vec x) {
    const double a = c0 + c1 * std::sin(kPi * dot(k, x));
    return SymMat{d, a, 0.0, a};
  };
  auto deriv = [c1, k, d](Vec x, int axis) {
    const double da = c1 * kPi * k[axis] * std::cos(kPi * dot(k, x));
    return SymMat{d, da, 0.0, da};
  };
  f.a_.resize(grid.num_nodes());
  for (int node = 0; node < grid.num_nodes(); ++node)
    f.a_[node] = value(grid.coord(node));
  f.eval_ = value;
  f.deriv_ = deriv;
  f.validate();
  return f;
}

CoefficientField CoefficientField::diagonal(const SpatialGrid& grid, double d1,
                                            double d2) {
  CoefficientField f;
  f.grid_ = &grid;
  f.family_ = "diagonal";
  const int d = grid.dim();
  f.a_.assign(grid.num_nodes(), SymMat{d, d1, 0.0, d2});
  f.eval_ = [d, d1, d2](Vec) { return SymMat{d, d1, 0.0, d2}; };
  f.deriv_ = [d](Vec, int) { return SymMat{d, 0.0, 0.0, 0.0}; };
  f.validate();
  return f;
}

CoefficientField CoefficientField::rotated_diagonal(const SpatialGrid& grid,
                                                    double theta, double l10,
                                                    double l11, double l20,
                                                    double l21) {
  if (grid.dim() != 2)
    throw std::invalid_argument("rotated_diagonal: requires a 2D grid");
  CoefficientField f;
  f.grid_ = &grid;
  f.family_ = "rotated-diagonal";
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  auto value = [=](Vec x) {
    const double l1 = l10 + l11 * std::sin(kPi * x.x);
    const double l2 = l20 + l21 * std::sin(kPi * x.x);
    return SymMat{2, c * c * l1 + s * s * l2, c * s * (l1 - l2),
                  s * s * l1 + c * c * l2};
  };
  auto deriv = [=](Vec x, int axis) {
    if (axis != 0) return SymMat{2, 0.0, 0.0, 0.0};
    const double dl1 = l11 * kPi * std::cos(kPi * x.x);
    const double dl2 = l21 * kPi * std::cos(kPi * x.x);
    return SymMat{2, c * c * dl1 + s * s * dl2, c * s * (dl1 - dl2),
                  s * s * dl1 + c * c * dl2};
  };
  f.a_.resize(grid.num_nodes());
  for (int node = 0; node < grid.num_nodes(); ++node)
    f.a_[node] = value(grid.coord(node));
  f.eval_ = value;
  f.deriv_ = deriv;
  f.validate();
  return f;
}

CoefficientField CoefficientField::from_nodal(const SpatialGrid& grid,
                                              std::vector<SymMat> entries,
                                              std::string family) {
  if (static_cast<int>(entries.size()) != grid.num_nodes())
    throw std::invalid_argument("from_nodal: entry count mismatch");
  CoefficientField f;
  f.grid_ = &grid;
  f.family_ = std::move(family);
  f.a_ = std::move(entries);
  for (auto& m : f.a_) m.dim = grid.dim();
  f.validate();
  return f;
}

SymMat CoefficientField::at_point(Vec x) const {
  if (!eval_)
    throw std::runtime_error(
        "CoefficientField: no analytic descriptor for point evaluation");
  return eval_(x);
}

SymMat CoefficientField::cell_average(int cell) const {
  const auto corners = grid_->cell_corners(cell);
  const int count = grid_->dim() == 1 ? 2 : 4;
  SymMat m{grid_->dim(), 0.0, 0.0, 0.0};
  for (int k = 0; k < count; ++k) m = m + a_[corners[k]];
  return (1.0 / count) * m;
}

double CoefficientField::face_diag(int axis, int node_lo, int node_hi) const {
  const double lo = axis == 0 ? a_[node_lo].a11 : a_[node_lo].a22;
  const double hi = axis == 0 ? a_[node_hi].a11 : a_[node_hi].a22;
  return 0.5 * (lo + hi);
}

SymMat CoefficientField::d_axis(int node, int axis) const {
  return d_axis_at_point(grid_->coord(node), axis);
}

SymMat CoefficientField::d_axis_at_point(Vec x, int axis) const {
  if (!deriv_)
    throw std::runtime_error(
        "CoefficientField: gradient of A requires an analytic descriptor");
  return deriv_(x, axis);
}

EllipticityBounds CoefficientField::ellipticity_bounds() const {
  EllipticityBounds b{a_[0].min_eigenvalue(), a_[0].max_eigenvalue()};
  for (const auto& m : a_) {
    const double lo = m.min_eigenvalue();
    const double hi = m.max_eigenvalue();
    if (lo <= 0.0)
      throw std::runtime_error(
          "ellipticity_bounds: non-positive eigenvalue encountered");
    b.c1 = std::min(b.c1, lo);
    b.c2 = std::max(b.c2, hi);
  }
  return b;
}

double a_norm_sq(const CoefficientField& A, int node, CVec xi) {
  return A.at(node).quad(xi);
}

double a_norm_sq(const CoefficientField& A, int node,
                 std::span<const Complex> xi) {
  if (static_cast<int>(xi.size()) != A.dim())
    throw std::invalid_argument("a_norm_sq: dimension mismatch");
  CVec v;
  v.x = xi[0];
  if (xi.size() > 1) v.y = xi[1];
  return a_norm_sq(A, node, v);
}

}  // namespace slantwave
