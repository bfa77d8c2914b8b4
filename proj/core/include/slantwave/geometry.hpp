#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slantwave/types.hpp"

namespace slantwave {

class CoefficientField;

/// Spatial domain: an interval or an axis-aligned rectangle, together with
/// the time horizon T of the space-time cylinder.
struct Domain {
  enum class Kind { Interval, Rectangle };

  Kind kind = Kind::Interval;
  std::array<std::pair<double, double>, 2> bounds{{{0.0, 1.0}, {0.0, 1.0}}};
  double time_horizon = 1.0;

  static Domain interval(double lo, double hi, double time_horizon);
  static Domain rectangle(double lo0, double hi0, double lo1, double hi1,
                          double time_horizon);

  int dim() const { return kind == Kind::Interval ? 1 : 2; }
  double length(int axis) const {
    return bounds[axis].second - bounds[axis].first;
  }
};

/// Uniform tensor grid whose nodes include the boundary exactly.
class SpatialGrid {
 public:
  SpatialGrid() = default;
  SpatialGrid(const Domain& domain, int n0, int n1 = 0);

  const Domain& domain() const { return domain_; }
  int dim() const { return domain_.dim(); }
  int nx() const { return n_[0]; }
  int ny() const { return n_[1]; }
  int num_nodes() const { return n_[0] * n_[1]; }
  double hx() const { return h_[0]; }
  double hy() const { return h_[1]; }
  double h(int axis) const { return h_[axis]; }
  double h_min() const { return dim() == 1 ? h_[0] : std::min(h_[0], h_[1]); }

  int index(int i, int j = 0) const { return j * n_[0] + i; }
  int ix(int node) const { return node % n_[0]; }
  int iy(int node) const { return node / n_[0]; }
  Vec coord(int node) const {
    return {domain_.bounds[0].first + ix(node) * h_[0],
            dim() == 2 ? domain_.bounds[1].first + iy(node) * h_[1] : 0.0};
  }
  bool on_boundary(int node) const;
  const std::vector<int>& boundary_nodes() const { return boundary_nodes_; }

  // Cells (intervals / rectangles between adjacent nodes).
  int cnx() const { return n_[0] - 1; }
  int cny() const { return dim() == 1 ? 1 : n_[1] - 1; }
  int num_cells() const { return cnx() * cny(); }
  int cell_index(int ci, int cj = 0) const { return cj * cnx() + ci; }
  int cell_ix(int cell) const { return cell % cnx(); }
  int cell_iy(int cell) const { return cell / cnx(); }
  /// Corner nodes of a cell; 1D cells report their two end nodes twice.
  std::array<int, 4> cell_corners(int cell) const;

  /// One flat boundary face: its outward normal and the nodes lying on it.
  struct Face {
    int axis = 0;   // axis the face is perpendicular to
    int side = 0;   // 0 = lower bound, 1 = upper bound
    Vec normal;     // outward unit normal
    std::vector<int> nodes;
  };
  const std::vector<Face>& faces() const { return faces_; }

  /// Tensor trapezoid weight of a node for integrals over the full domain.
  double trapezoid_weight(int node) const;
  /// Arc-length trapezoid weight of a node within one boundary face.
  double face_weight(const Face& face, int position) const;

 private:
  Domain domain_;
  std::array<int, 2> n_{2, 1};
  std::array<double, 2> h_{1.0, 0.0};
  std::vector<int> boundary_nodes_;
  std::vector<Face> faces_;
};

/// Graph hypersurface t = S(x): nodal values plus per-cell constant gradients.
/// Kinks live on cell interfaces; each cell interior is treated as smooth.
class Hypersurface {
 public:
  enum class Clamp { No, ToRange };

  static Hypersurface constant(const SpatialGrid& grid, double c);
  static Hypersurface affine(const SpatialGrid& grid, double c0, Vec slope,
                             std::optional<double> cap = std::nullopt,
                             Clamp clamp = Clamp::No);
  static Hypersurface from_nodal(const SpatialGrid& grid,
                                 std::vector<double> values);

  const SpatialGrid& grid() const { return *grid_; }
  double value(int node) const { return s_[node]; }
  const std::vector<double>& values() const { return s_; }
  Vec cell_gradient(int cell) const { return cell_grad_[cell]; }
  double t1() const { return t1_; }
  double t2() const { return t2_; }

  /// Interior nodes (1D) where the two adjacent cell gradients jump.
  const std::vector<int>& kink_nodes_1d() const { return kinks_1d_; }

  /// Maximal smooth node ranges [first,last] along one grid line, split at
  /// gradient jumps of the cells adjacent to the line.
  std::vector<std::pair<int, int>> axis_runs(int axis, int line) const;

  struct Normal {
    Vec nu_x;
    double nu_t = 1.0;
  };
  Normal normal_in_cell(int cell) const;
  /// Normal at a spatial point; throws "normal undefined at kink" when the
  /// point sits on an interface across which the gradient jumps.
  Normal normal_at(Vec x) const;

 private:
  Hypersurface(const SpatialGrid& grid, std::vector<double> values);
  const SpatialGrid* grid_ = nullptr;
  std::vector<double> s_;
  std::vector<Vec> cell_grad_;
  std::vector<int> kinks_1d_;
  double t1_ = 0.0;
  double t2_ = 0.0;
};

enum class CausalKind { Spacelike, Lightlike, Timelike };

struct CausalClass {
  CausalKind kind = CausalKind::Spacelike;
  double max_slope = 0.0;  // max over cells of |grad S|_A
};

const char* to_string(CausalKind kind);

/// Causal classification of a hypersurface with respect to A, from the
/// per-cell anisotropic slope |grad S|_A evaluated with the cell-averaged A.
CausalClass classify(const Hypersurface& surface, const CoefficientField& A,
                     double tol = 1e-10);

/// Space-time region bookkeeping for Q_tau, Sigma_tau, H_tau and the node set
/// of Gamma_{S,tau}, on a time grid of n_levels levels spaced dt apart.
struct RegionMasks {
  struct ColumnSpan {
    bool empty = true;
    double t_lo = 0.0;
    double t_hi = -1.0;
    int first_level = 0;  // first level with t >= t_lo
    int last_level = -1;  // last level with t <= t_hi
  };

  double tau = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  bool empty = false;  // tau > t2: every region below is empty
  double dt = 0.0;
  int n_levels = 0;
  std::vector<unsigned char> h_mask;     // per node: S(x) >= tau
  std::vector<ColumnSpan> q_columns;     // per node, t in [tau, S(x)]
  std::vector<ColumnSpan> sigma_columns; // per boundary node (grid order)

  bool q_contains(int level, int node) const {
    const auto& c = q_columns[node];
    if (c.empty) return false;
    const double t = level * dt;
    return t >= c.t_lo - 1e-14 && t <= c.t_hi + 1e-14;
  }
  /// Gamma_{S,tau} projects to the same node set as H_tau.
  bool gamma_contains(int node) const { return h_mask[node] != 0; }
};

RegionMasks region_masks(const Hypersurface& surface, double tau, double dt,
                         int n_levels);

struct FoliationViolation {
  int pair_lo = 0;
  int pair_hi = 0;
  int node = 0;
  double s_lo = 0.0;
  double s_hi = 0.0;
};

struct FoliationCheck {
  bool ok = true;
  std::optional<FoliationViolation> violation;
};

/// Pointwise monotonicity check of an ordered family of surfaces.
FoliationCheck validate_foliation(const std::vector<Hypersurface>& family);

}  // namespace slantwave
