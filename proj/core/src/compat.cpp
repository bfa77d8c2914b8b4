#include "slantwave/compat.hpp"

#include <cmath>
#include <stdexcept>

#include "slantwave/smooth.hpp"

namespace slantwave {

double Cutoff::operator()(double t) const {
  return smooth_step(2.0 - std::abs(t));
}

double Cutoff::deriv(double t) const {
  const double sign = t < 0.0 ? -1.0 : 1.0;
  return -sign * smooth_step_deriv(2.0 - std::abs(t));
}

int default_compat_order(int dim) { return (dim + 1) / 2 + 2; }

CompatHierarchy build_hierarchy(const std::vector<Complex>& u0,
                                const std::vector<Complex>& u1,
                                const AnalyticField& source,
                                const CoefficientField& A, int K) {
  if (K < 0) throw std::invalid_argument("build_hierarchy: K < 0");
  const auto& grid = A.grid();
  if (u0.size() != static_cast<std::size_t>(grid.num_nodes()) ||
      u1.size() != u0.size())
    throw std::invalid_argument("build_hierarchy: nodal array size mismatch");

  CompatHierarchy h;
  h.u.resize(K + 1);
  h.u[0] = u0;
  if (K >= 1) h.u[1] = u1;
  for (int k = 2; k <= K; ++k) {
    h.u[k].resize(grid.num_nodes());
    for (int node = 0; node < grid.num_nodes(); ++node) {
      Complex g{};
      if (source && source.dt_k_at0)
        g = source.dt_k_at0(grid.coord(node), k - 2);
      h.u[k][node] =
          g + nodal_div_a_grad_onesided(A, grid, h.u[k - 2], node);
    }
  }
  return h;
}

namespace {

MollifiedBoundary mollify_impl(const BoundaryField& f,
                               std::vector<std::vector<Complex>> taylor,
                               double epsilon) {
  const auto& grid = f.grid();
  const double T = (f.n_levels() - 1) * f.dt();
  if (!(epsilon > 0.0)) throw std::invalid_argument("mollify: eps <= 0");
  if (!(2.0 * epsilon < T))
    throw std::invalid_argument("mollify: 2 eps must be below the horizon");
  int levels_inside = 0;
  for (int level = 0; level < f.n_levels(); ++level)
    if (level * f.dt() < 2.0 * epsilon) ++levels_inside;
  if (levels_inside < 4)
    throw std::invalid_argument(
        "mollify: eps too large for the level grid (fewer than 4 levels "
        "inside [0, 2 eps])");

  MollifiedBoundary out;
  out.epsilon = epsilon;
  out.taylor = std::move(taylor);
  out.values = BoundaryField(grid, f.n_levels(), f.dt());
  const Cutoff chi;
  const int nb = out.values.num_boundary_nodes();
  for (int level = 0; level < f.n_levels(); ++level) {
    const double t = level * f.dt();
    const double c = chi(t / epsilon);
    for (int b = 0; b < nb; ++b) {
      if (c == 0.0) {
        out.values.at(level, b) = f.at(level, b);  // bit-exact tail
        continue;
      }
      Complex taylor_sum{};
      double t_pow = 1.0;
      double factorial = 1.0;
      for (std::size_t k = 0; k < out.taylor.size(); ++k) {
        if (k > 0) {
          t_pow *= t;
          factorial *= static_cast<double>(k);
        }
        taylor_sum += out.taylor[k][b] * (t_pow / factorial);
      }
      out.values.at(level, b) =
          c * taylor_sum + (1.0 - c) * f.at(level, b);
    }
  }
  return out;
}

}  // namespace

MollifiedBoundary mollify_high_order(const BoundaryField& f,
                                     const CompatHierarchy& hierarchy,
                                     double epsilon) {
  const auto& grid = f.grid();
  const auto& bnodes = grid.boundary_nodes();
  std::vector<std::vector<Complex>> taylor(hierarchy.u.size());
  for (std::size_t k = 0; k < hierarchy.u.size(); ++k) {
    taylor[k].resize(bnodes.size());
    for (std::size_t b = 0; b < bnodes.size(); ++b)
      taylor[k][b] = hierarchy.u[k][bnodes[b]];
  }
  return mollify_impl(f, std::move(taylor), epsilon);
}

MollifiedBoundary mollify_first_order(const BoundaryField& f,
                                      const std::vector<Complex>& u0,
                                      double epsilon) {
  const auto& grid = f.grid();
  const auto& bnodes = grid.boundary_nodes();
  std::vector<std::vector<Complex>> taylor(1);
  taylor[0].resize(bnodes.size());
  for (std::size_t b = 0; b < bnodes.size(); ++b)
    taylor[0][b] = u0[bnodes[b]];
  return mollify_impl(f, std::move(taylor), epsilon);
}

double compatibility_residual(const MollifiedBoundary& f_eps,
                              const CompatHierarchy& hierarchy, int k) {
  if (k < 0 || k > hierarchy.order())
    throw std::invalid_argument("compatibility_residual: k > K");
  if (k >= static_cast<int>(f_eps.taylor.size()))
    throw std::invalid_argument(
        "compatibility_residual: k beyond the mollifier's Taylor order");
  const auto& grid = f_eps.values.grid();
  const auto& bnodes = grid.boundary_nodes();
  double worst = 0.0;
  for (std::size_t b = 0; b < bnodes.size(); ++b) {
    // chi == 1 on |t| <= eps, so d_t^k f_eps(., 0) is exactly the stored
    // Taylor coefficient of the construction.
    const Complex closed_form = f_eps.taylor[k][b];
    worst = std::max(worst,
                     std::abs(closed_form - hierarchy.u[k][bnodes[b]]));
  }
  return worst;
}

double h1_sigma_distance_sq(const BoundaryField& a, const BoundaryField& b) {
  if (a.n_levels() != b.n_levels() ||
      a.num_boundary_nodes() != b.num_boundary_nodes())
    throw std::invalid_argument("h1_sigma_distance_sq: shape mismatch");
  const auto& grid = a.grid();
  const double dt = a.dt();
  const int nl = a.n_levels();
  const int nb = a.num_boundary_nodes();

  std::vector<std::vector<Complex>> diff(nb, std::vector<Complex>(nl));
  for (int bi = 0; bi < nb; ++bi)
    for (int level = 0; level < nl; ++level)
      diff[bi][level] = a.at(level, bi) - b.at(level, bi);

  auto dt_of = [&](int bi, int level) {
    const auto& c = diff[bi];
    if (level == 0) return (-3.0 * c[0] + 4.0 * c[1] - c[2]) / (2.0 * dt);
    if (level == nl - 1)
      return (3.0 * c[nl - 1] - 4.0 * c[nl - 2] + c[nl - 3]) / (2.0 * dt);
    return (c[level + 1] - c[level - 1]) / (2.0 * dt);
  };

  std::vector<int> bindex_of_node(grid.num_nodes(), -1);
  for (std::size_t bi = 0; bi < grid.boundary_nodes().size(); ++bi)
    bindex_of_node[grid.boundary_nodes()[bi]] = static_cast<int>(bi);

  double sum = 0.0;
  for (const auto& face : grid.faces()) {
    const int count = static_cast<int>(face.nodes.size());
    for (int p = 0; p < count; ++p) {
      const int bi = bindex_of_node[face.nodes[p]];
      auto tangential_sq = [&](int level) {
        if (grid.dim() == 1) return 0.0;
        const double h = face.axis == 0 ? grid.hy() : grid.hx();
        auto value = [&](int k) {
          return diff[bindex_of_node[face.nodes[k]]][level];
        };
        Complex d;
        if (p > 0 && p < count - 1)
          d = (value(p + 1) - value(p - 1)) / (2.0 * h);
        else if (p == 0)
          d = (-3.0 * value(0) + 4.0 * value(1) - value(2)) / (2.0 * h);
        else
          d = (3.0 * value(p) - 4.0 * value(p - 1) + value(p - 2)) / (2.0 * h);
        return std::norm(d);
      };
      // Trapezoid in t over the full span [0, T].
      double col = 0.0;
      for (int level = 0; level < nl; ++level) {
        const double wt = (level == 0 || level == nl - 1) ? 0.5 * dt : dt;
        col += wt * (std::norm(diff[bi][level]) + std::norm(dt_of(bi, level)) +
                     tangential_sq(level));
      }
      sum += grid.face_weight(face, p) * col;
    }
  }
  return sum;
}

}  // namespace slantwave
