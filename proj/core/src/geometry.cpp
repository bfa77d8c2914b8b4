#include "slantwave/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slantwave/coefficients.hpp"

namespace slantwave {

namespace {
constexpr double kKinkTol = 1e-8;
}

Domain Domain::interval(double lo, double hi, double time_horizon) {
  if (!(lo < hi)) throw std::invalid_argument("Domain: empty interval");
  if (!(time_horizon > 0.0))
    throw std::invalid_argument("Domain: time horizon must be positive");
  Domain d;
  d.kind = Kind::Interval;
  d.bounds[0] = {lo, hi};
  d.bounds[1] = {0.0, 0.0};
  d.time_horizon = time_horizon;
  return d;
}

Domain Domain::rectangle(double lo0, double hi0, double lo1, double hi1,
                         double time_horizon) {
  if (!(lo0 < hi0) || !(lo1 < hi1))
    throw std::invalid_argument("Domain: empty rectangle side");
  if (!(time_horizon > 0.0))
    throw std::invalid_argument("Domain: time horizon must be positive");
  Domain d;
  d.kind = Kind::Rectangle;
  d.bounds[0] = {lo0, hi0};
  d.bounds[1] = {lo1, hi1};
  d.time_horizon = time_horizon;
  return d;
}

SpatialGrid::SpatialGrid(const Domain& domain, int n0, int n1)
    : domain_(domain) {
  if (n0 < 2) throw std::invalid_argument("SpatialGrid: need >= 2 nodes");
  n_[0] = n0;
  if (domain.dim() == 2) {
    if (n1 < 2) throw std::invalid_argument("SpatialGrid: need >= 2 nodes");
    n_[1] = n1;
  } else {
    n_[1] = 1;
  }
  h_[0] = domain.length(0) / (n_[0] - 1);
  h_[1] = domain.dim() == 2 ? domain.length(1) / (n_[1] - 1) : 0.0;

  for (int node = 0; node < num_nodes(); ++node) {
    if (on_boundary(node)) boundary_nodes_.push_back(node);
  }

  if (dim() == 1) {
    Face left{0, 0, {-1.0, 0.0}, {index(0)}};
    Face right{0, 1, {1.0, 0.0}, {index(n_[0] - 1)}};
    faces_ = {left, right};
  } else {
    Face left{0, 0, {-1.0, 0.0}, {}};
    Face right{0, 1, {1.0, 0.0}, {}};
    Face bottom{1, 0, {0.0, -1.0}, {}};
    Face top{1, 1, {0.0, 1.0}, {}};
    for (int j = 0; j < n_[1]; ++j) {
      left.nodes.push_back(index(0, j));
      right.nodes.push_back(index(n_[0] - 1, j));
    }
    for (int i = 0; i < n_[0]; ++i) {
      bottom.nodes.push_back(index(i, 0));
      top.nodes.push_back(index(i, n_[1] - 1));
    }
    faces_ = {left, right, bottom, top};
  }
}

bool SpatialGrid::on_boundary(int node) const {
  const int i = ix(node);
  if (i == 0 || i == n_[0] - 1) return true;
  if (dim() == 2) {
    const int j = iy(node);
    if (j == 0 || j == n_[1] - 1) return true;
  }
  return false;
}

std::array<int, 4> SpatialGrid::cell_corners(int cell) const {
  const int ci = cell_ix(cell);
  if (dim() == 1) {
    return {index(ci), index(ci + 1), index(ci), index(ci + 1)};
  }
  const int cj = cell_iy(cell);
  return {index(ci, cj), index(ci + 1, cj), index(ci, cj + 1),
          index(ci + 1, cj + 1)};
}

double SpatialGrid::trapezoid_weight(int node) const {
  const int i = ix(node);
  double w = (i == 0 || i == n_[0] - 1) ? 0.5 * h_[0] : h_[0];
  if (dim() == 2) {
    const int j = iy(node);
    w *= (j == 0 || j == n_[1] - 1) ? 0.5 * h_[1] : h_[1];
  }
  return w;
}

double SpatialGrid::face_weight(const Face& face, int position) const {
  if (dim() == 1) return 1.0;  // counting measure on the two endpoints
  const double h = face.axis == 0 ? h_[1] : h_[0];
  const int count = static_cast<int>(face.nodes.size());
  return (position == 0 || position == count - 1) ? 0.5 * h : h;
}

Hypersurface::Hypersurface(const SpatialGrid& grid, std::vector<double> values)
    : grid_(&grid), s_(std::move(values)) {
  if (static_cast<int>(s_.size()) != grid.num_nodes())
    throw std::invalid_argument("Hypersurface: nodal array size mismatch");
  const double T = grid.domain().time_horizon;
  t1_ = s_[0];
  t2_ = s_[0];
  for (double v : s_) {
    if (v < -1e-12 || v > T + 1e-12)
      throw std::invalid_argument("Hypersurface: S(x) outside [0, T]");
    t1_ = std::min(t1_, v);
    t2_ = std::max(t2_, v);
  }

  cell_grad_.resize(grid.num_cells());
  for (int c = 0; c < grid.num_cells(); ++c) {
    const auto corners = grid.cell_corners(c);
    Vec g;
    if (grid.dim() == 1) {
      g.x = (s_[corners[1]] - s_[corners[0]]) / grid.hx();
    } else {
      g.x = 0.5 *
            ((s_[corners[1]] - s_[corners[0]]) +
             (s_[corners[3]] - s_[corners[2]])) /
            grid.hx();
      g.y = 0.5 *
            ((s_[corners[2]] - s_[corners[0]]) +
             (s_[corners[3]] - s_[corners[1]])) /
            grid.hy();
    }
    cell_grad_[c] = g;
  }

  if (grid.dim() == 1) {
    for (int i = 1; i < grid.nx() - 1; ++i) {
      const double jump =
          std::abs(cell_grad_[i].x - cell_grad_[i - 1].x);
      if (jump > kKinkTol * (1.0 + std::abs(cell_grad_[i].x)))
        kinks_1d_.push_back(i);
    }
  }
}

Hypersurface Hypersurface::constant(const SpatialGrid& grid, double c) {
  return Hypersurface(grid, std::vector<double>(grid.num_nodes(), c));
}

Hypersurface Hypersurface::affine(const SpatialGrid& grid, double c0,
                                  Vec slope, std::optional<double> cap,
                                  Clamp clamp) {
  std::vector<double> values(grid.num_nodes());
  const double T = grid.domain().time_horizon;
  for (int node = 0; node < grid.num_nodes(); ++node) {
    double v = c0 + dot(slope, grid.coord(node));
    if (cap) v = std::min(v, *cap);
    if (clamp == Clamp::ToRange) v = std::clamp(v, 0.0, T);
    values[node] = v;
  }
  return Hypersurface(grid, std::move(values));
}

Hypersurface Hypersurface::from_nodal(const SpatialGrid& grid,
                                      std::vector<double> values) {
  return Hypersurface(grid, std::move(values));
}

std::vector<std::pair<int, int>> Hypersurface::axis_runs(int axis,
                                                         int line) const {
  const auto& g = *grid_;
  const int count = axis == 0 ? g.nx() : g.ny();
  std::vector<std::pair<int, int>> runs;
  int start = 0;
  auto grad_component = [&](int cell_along) {
    // Gradient of the cell on the given side of the line, clamped into range.
    int ci = axis == 0 ? cell_along : std::min(line, g.cnx() - 1);
    int cj = axis == 0 ? std::min(line, g.cny() - 1) : cell_along;
    if (g.dim() == 1) cj = 0;
    return cell_grad_[g.cell_index(ci, cj)][axis];
  };
  for (int k = 1; k < count - 1; ++k) {
    const double lo = grad_component(k - 1);
    const double hi = grad_component(k);
    if (std::abs(hi - lo) > kKinkTol * (1.0 + std::abs(hi))) {
      runs.emplace_back(start, k);
      start = k;
    }
  }
  runs.emplace_back(start, count - 1);
  return runs;
}

Hypersurface::Normal Hypersurface::normal_in_cell(int cell) const {
  const Vec g = cell_grad_[cell];
  const double den = std::sqrt(1.0 + dot(g, g));
  return {{-g.x / den, -g.y / den}, 1.0 / den};
}

Hypersurface::Normal Hypersurface::normal_at(Vec x) const {
  const auto& g = *grid_;
  const double fx = (x.x - g.domain().bounds[0].first) / g.hx();
  int ci = static_cast<int>(std::floor(fx));
  ci = std::clamp(ci, 0, g.cnx() - 1);
  int cj = 0;
  double fy = 0.0;
  if (g.dim() == 2) {
    fy = (x.y - g.domain().bounds[1].first) / g.hy();
    cj = std::clamp(static_cast<int>(std::floor(fy)), 0, g.cny() - 1);
  }
  auto on_interface = [](double f) {
    return std::abs(f - std::round(f)) < 1e-12;
  };
  // A query landing on an interior interface is ill-posed when the gradient
  // jumps across it.
  if (on_interface(fx)) {
    const int i = static_cast<int>(std::round(fx));
    if (i > 0 && i < g.cnx()) {
      const Vec a = cell_grad_[g.cell_index(i - 1, cj)];
      const Vec b = cell_grad_[g.cell_index(i, cj)];
      if (std::abs(a.x - b.x) + std::abs(a.y - b.y) >
          kKinkTol * (1.0 + norm(b)))
        throw std::runtime_error("normal undefined at kink");
    }
  }
  if (g.dim() == 2 && on_interface(fy)) {
    const int j = static_cast<int>(std::round(fy));
    if (j > 0 && j < g.cny()) {
      const Vec a = cell_grad_[g.cell_index(ci, j - 1)];
      const Vec b = cell_grad_[g.cell_index(ci, j)];
      if (std::abs(a.x - b.x) + std::abs(a.y - b.y) >
          kKinkTol * (1.0 + norm(b)))
        throw std::runtime_error("normal undefined at kink");
    }
  }
  return normal_in_cell(g.cell_index(ci, cj));
}

const char* to_string(CausalKind kind) {
  switch (kind) {
    case CausalKind::Spacelike: return "spacelike";
    case CausalKind::Lightlike: return "lightlike";
    case CausalKind::Timelike: return "timelike";
  }
  return "unknown";
}

CausalClass classify(const Hypersurface& surface, const CoefficientField& A,
                     double tol) {
  const auto& grid = surface.grid();
  double max_slope = 0.0;
  bool near_light = false;
  for (int c = 0; c < grid.num_cells(); ++c) {
    const Vec g = surface.cell_gradient(c);
    const double slope = std::sqrt(std::max(0.0, A.cell_average(c).quad(g)));
    max_slope = std::max(max_slope, slope);
    if (std::abs(slope - 1.0) <= tol * std::max(1.0, slope)) near_light = true;
  }
  CausalClass result;
  result.max_slope = max_slope;
  if (max_slope > 1.0 + tol)
    result.kind = CausalKind::Timelike;
  else if (near_light)
    result.kind = CausalKind::Lightlike;
  else
    result.kind = CausalKind::Spacelike;
  return result;
}

namespace {

RegionMasks::ColumnSpan make_span(double t_lo, double t_hi, double dt,
                                  int n_levels) {
  RegionMasks::ColumnSpan span;
  if (t_hi < t_lo - 1e-14) return span;
  span.empty = false;
  span.t_lo = t_lo;
  span.t_hi = t_hi;
  span.first_level = static_cast<int>(std::ceil(t_lo / dt - 1e-9));
  span.last_level = static_cast<int>(std::floor(t_hi / dt + 1e-9));
  span.first_level = std::clamp(span.first_level, 0, n_levels - 1);
  span.last_level = std::clamp(span.last_level, -1, n_levels - 1);
  return span;
}

}  // namespace

RegionMasks region_masks(const Hypersurface& surface, double tau, double dt,
                         int n_levels) {
  const auto& grid = surface.grid();
  const double T = grid.domain().time_horizon;
  if (tau < -1e-12 || tau > T + 1e-12)
    throw std::invalid_argument("region_masks: tau outside [0, T]");

  RegionMasks masks;
  masks.tau = tau;
  masks.t1 = surface.t1();
  masks.t2 = surface.t2();
  masks.dt = dt;
  masks.n_levels = n_levels;
  masks.empty = tau > masks.t2 + 1e-14;

  masks.h_mask.resize(grid.num_nodes(), 0);
  masks.q_columns.resize(grid.num_nodes());
  for (int node = 0; node < grid.num_nodes(); ++node) {
    const double s = surface.value(node);
    masks.h_mask[node] = (s >= tau - 1e-14) ? 1 : 0;
    if (!masks.empty && s >= tau - 1e-14)
      masks.q_columns[node] = make_span(tau, s, dt, n_levels);
  }
  masks.sigma_columns.resize(grid.boundary_nodes().size());
  for (std::size_t b = 0; b < grid.boundary_nodes().size(); ++b) {
    const int node = grid.boundary_nodes()[b];
    const double s = surface.value(node);
    if (!masks.empty && s >= tau - 1e-14)
      masks.sigma_columns[b] = make_span(tau, s, dt, n_levels);
  }
  return masks;
}

FoliationCheck validate_foliation(const std::vector<Hypersurface>& family) {
  FoliationCheck check;
  for (std::size_t k = 0; k + 1 < family.size(); ++k) {
    const auto& lo = family[k];
    const auto& hi = family[k + 1];
    if (lo.values().size() != hi.values().size())
      throw std::invalid_argument("validate_foliation: mismatched grids");
    for (int node = 0; node < static_cast<int>(lo.values().size()); ++node) {
      if (lo.value(node) > hi.value(node) + 1e-12) {
        check.ok = false;
        check.violation = FoliationViolation{
            static_cast<int>(k), static_cast<int>(k + 1), node,
            lo.value(node), hi.value(node)};
        return check;
      }
    }
  }
  return check;
}

}  // namespace slantwave
