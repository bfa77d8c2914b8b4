#include "slantwave/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slantwave {

namespace {

/// Quadratic interpolation of a per-level complex array (mirrors interp_time).
Complex quad_interp(const std::vector<Complex>& col, double dt, double t) {
  const int n = static_cast<int>(col.size());
  int k = static_cast<int>(std::lround(t / dt));
  k = std::clamp(k, 1, n - 2);
  const double s = (t - (k - 1) * dt) / dt;
  const Complex d1 = col[k] - col[k - 1];
  const Complex d2 = 0.5 * (col[k + 1] - 2.0 * col[k] + col[k - 1]);
  return col[k - 1] + s * d1 + s * (s - 1.0) * d2;
}

/// One-sided/centered derivative of traced values g along a run [a, b].
Complex run_derivative(const std::vector<Complex>& g, int a, int b, int i,
                       double h, int stride, int base) {
  auto at = [&](int k) { return g[base + k * stride]; };
  if (b - a == 0) return Complex{};
  if (b - a == 1) return (at(b) - at(a)) / h;  // short run: first order
  if (i > a && i < b) return (at(i + 1) - at(i - 1)) / (2.0 * h);
  if (i == a) return (-3.0 * at(a) + 4.0 * at(a + 1) - at(a + 2)) / (2.0 * h);
  return (3.0 * at(b) - 4.0 * at(b - 1) + at(b - 2)) / (2.0 * h);
}

double safe_ratio(double lhs, double rhs) {
  if (rhs > 0.0) return lhs / rhs;
  return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

/// Nodal u_t-weight: 1 - |grad S|_A^2 averaged over the cells at the node.
double nodal_ut_weight(const Hypersurface& S, const CoefficientField& A,
                       int node) {
  const auto& grid = S.grid();
  const int i = grid.ix(node);
  const int j = grid.iy(node);
  double sum = 0.0;
  int count = 0;
  for (int cj = std::max(0, j - 1); cj <= std::min(grid.cny() - 1, j); ++cj) {
    for (int ci = std::max(0, i - 1); ci <= std::min(grid.cnx() - 1, i);
         ++ci) {
      const int c = grid.cell_index(ci, cj);
      sum += 1.0 - A.cell_average(c).quad(S.cell_gradient(c));
      ++count;
    }
  }
  return sum / count;
}

}  // namespace

TraceData trace(const SpaceTimeField& u, const Hypersurface& S, double tau) {
  const auto& grid = u.grid();
  const double T = grid.domain().time_horizon;
  TraceData out;
  out.tau = tau;
  const int n = grid.num_nodes();
  out.u.resize(n);
  out.ut.resize(n);
  out.bulk_grad.resize(n);
  out.surf_grad.resize(n);

  for (int node = 0; node < n; ++node) {
    const double s = S.value(node);
    if (s < -1e-12 || s > T + 1e-12)
      throw std::out_of_range("trace: S(x) outside [0, T]");
    const auto ti = interp_time(u, node, s);
    out.u[node] = ti.u;
    out.ut[node] = ti.ut;
  }

  // Bulk gradient: spatial stencils applied to neighbor columns interpolated
  // at this node's surface time.
  for (int node = 0; node < n; ++node)
    out.bulk_grad[node] = grad_at_time(u, node, S.value(node));

  // Surface gradient: difference the traced nodal values directly, staying
  // inside the smooth runs of S along each axis.
  for (int axis = 0; axis < grid.dim(); ++axis) {
    const int lines = axis == 0 ? grid.ny() : grid.nx();
    const double h = grid.h(axis);
    for (int line = 0; line < lines; ++line) {
      const int base = axis == 0 ? grid.index(0, line) : grid.index(line, 0);
      const int stride = axis == 0 ? 1 : grid.nx();
      for (const auto& [a, b] : S.axis_runs(axis, line)) {
        for (int k = a; k <= b; ++k) {
          const int node = base + k * stride;
          out.surf_grad[node][axis] =
              run_derivative(out.u, a, b, k, h, stride, base);
        }
      }
    }
  }

  if (grid.dim() == 1) {
    out.cell_surf_grad_1d.resize(grid.num_cells());
    for (const auto& [a, b] : S.axis_runs(0, 0)) {
      for (int c = a; c < b; ++c) {
        out.cell_surf_grad_1d[c][0] = run_derivative(out.u, a, b, c, grid.hx(), 1, 0);
        out.cell_surf_grad_1d[c][1] =
            run_derivative(out.u, a, b, c + 1, grid.hx(), 1, 0);
      }
    }
  }

  // Chain rule: surf_grad = bulk_grad + grad(S) u_t, checked per node with
  // the adjacent-cell-averaged gradient of S on smooth pieces.
  double worst = 0.0;
  for (int node = 0; node < n; ++node) {
    const int i = grid.ix(node);
    const int j = grid.iy(node);
    // Skip nodes adjacent to kinks (both sides legitimately differ there).
    bool near_kink = false;
    if (grid.dim() == 1) {
      for (int kn : S.kink_nodes_1d())
        if (std::abs(kn - i) <= 1) near_kink = true;
    }
    if (near_kink) continue;
    Vec gs;
    int count = 0;
    for (int cj = std::max(0, j - 1); cj <= std::min(grid.cny() - 1, j);
         ++cj) {
      for (int ci = std::max(0, i - 1); ci <= std::min(grid.cnx() - 1, i);
           ++ci) {
        gs = gs + S.cell_gradient(grid.cell_index(ci, cj));
        ++count;
      }
    }
    gs = (1.0 / count) * gs;
    const CVec expect = out.bulk_grad[node] + out.ut[node] * CVec{gs.x, gs.y};
    const CVec diff = out.surf_grad[node] - expect;
    worst = std::max(worst, std::sqrt(std::norm(diff.x) + std::norm(diff.y)));
  }
  out.chain_rule_discrepancy = worst;
  return out;
}

namespace {

/// 1D crossing-aware cellwise quadrature of the energy-type integrand
/// I = |grad|_A^2 + w_cell |u_t|^2 over {S >= tau}.
double gamma_energy_1d(const TraceData& tr, const Hypersurface& S,
                       const CoefficientField& A, double tau,
                       const std::function<double(int, Complex)>& grad_term) {
  const auto& grid = S.grid();
  const double h = grid.hx();
  double sum = 0.0;
  for (int c = 0; c < grid.num_cells(); ++c) {
    const int na = c;
    const int nb = c + 1;
    const double sa = S.value(na);
    const double sb = S.value(nb);
    const bool ina = sa >= tau - 1e-14;
    const bool inb = sb >= tau - 1e-14;
    if (!ina && !inb) continue;
    const double w_cell = 1.0 - A.cell_average(c).quad(S.cell_gradient(c));
    const double fa =
        grad_term(na, tr.cell_surf_grad_1d[c][0]) + w_cell * std::norm(tr.ut[na]);
    const double fb =
        grad_term(nb, tr.cell_surf_grad_1d[c][1]) + w_cell * std::norm(tr.ut[nb]);
    if (ina && inb) {
      sum += 0.5 * h * (fa + fb);
      continue;
    }
    const double frac = (tau - sa) / (sb - sa);
    const double fcross = fa + frac * (fb - fa);
    if (ina)
      sum += 0.5 * (frac * h) * (fa + fcross);
    else
      sum += 0.5 * ((1.0 - frac) * h) * (fcross + fb);
  }
  return sum;
}

}  // namespace

double surface_energy(const TraceData& tr, const Hypersurface& S,
                      const CoefficientField& A) {
  const auto causal = classify(S, A);
  if (causal.kind == CausalKind::Timelike)
    throw std::runtime_error("energy undefined for timelike Gamma_S");
  const auto& grid = S.grid();

  if (grid.dim() == 1) {
    return gamma_energy_1d(tr, S, A, tr.tau, [&](int node, Complex g) {
      return A.at(node).quad(CVec{g, Complex{}});
    });
  }

  auto nodal = [&](int node) {
    return A.at(node).quad(tr.surf_grad[node]) +
           nodal_ut_weight(S, A, node) * std::norm(tr.ut[node]);
  };
  return integrate_above_level(S, tr.tau, nodal).value;
}

double partial_energy(const SpaceTimeField& u, const Hypersurface& S,
                      const CoefficientField& A, double tau) {
  return surface_energy(trace(u, S, tau), S, A);
}

double horizontal_energy(const SpaceTimeField& u, const CoefficientField& A,
                         const Hypersurface& S, double tau) {
  const auto& grid = u.grid();
  std::vector<Complex> level(grid.num_nodes());
  std::vector<Complex> ut(grid.num_nodes());
  const bool at_zero = std::abs(tau) < 1e-12 && u.has_initial_velocity();
  for (int node = 0; node < grid.num_nodes(); ++node) {
    const auto ti = interp_time(u, node, tau);
    level[node] = ti.u;
    ut[node] = at_zero ? u.initial_velocity()[node] : ti.ut;
  }
  auto nodal = [&](int node) {
    return A.at(node).quad(nodal_grad(grid, level, node)) +
           std::norm(ut[node]);
  };
  return integrate_above_level(S, tau, nodal).value;
}

double initial_energy(const SpatialGrid& grid, const CoefficientField& A,
                      const InitialData& data) {
  auto nodal = [&](int node) {
    return A.at(node).quad(nodal_grad(grid, data.u0, node)) +
           std::norm(data.u1[node]);
  };
  return integrate_omega(grid, nodal);
}

H1SurfaceNorm h1_surface_norm(const TraceData& tr, const Hypersurface& S,
                              const CoefficientField& A) {
  const auto& grid = S.grid();
  H1SurfaceNorm out;

  if (grid.dim() == 1) {
    const double h = grid.hx();
    for (int c = 0; c < grid.num_cells(); ++c) {
      const Vec gs = S.cell_gradient(c);
      const double w = 1.0 / std::sqrt(1.0 + dot(gs, gs));
      const double fa = std::norm(tr.cell_surf_grad_1d[c][0]) * w;
      const double fb = std::norm(tr.cell_surf_grad_1d[c][1]) * w;
      out.value += 0.5 * h * (fa + fb);
    }
  } else {
    auto nodal = [&](int node) {
      const int i = grid.ix(node);
      const int j = grid.iy(node);
      Vec gs;
      int count = 0;
      for (int cj = std::max(0, j - 1); cj <= std::min(grid.cny() - 1, j);
           ++cj) {
        for (int ci = std::max(0, i - 1); ci <= std::min(grid.cnx() - 1, i);
             ++ci) {
          gs = gs + S.cell_gradient(grid.cell_index(ci, cj));
          ++count;
        }
      }
      gs = (1.0 / count) * gs;
      const double w = 1.0 / std::sqrt(1.0 + dot(gs, gs));
      return (std::norm(tr.surf_grad[node].x) + std::norm(tr.surf_grad[node].y)) *
             w;
    };
    out.value = integrate_omega(grid, nodal);
  }

  out.energy = surface_energy(tr, S, A);
  const auto bounds = A.ellipticity_bounds();
  out.bound = std::max(1.0, bounds.c2) / bounds.c1 * out.energy;
  out.within_bound = out.value <= out.bound + 1e-9 * (1.0 + out.bound);
  return out;
}

ConormalTrace conormal(const SpaceTimeField& u, const CoefficientField& A,
                       const Hypersurface& S, double tau) {
  const auto& grid = u.grid();
  ConormalTrace out;
  const int n_levels = u.n_levels();
  out.values.resize(grid.faces().size());

  for (std::size_t fi = 0; fi < grid.faces().size(); ++fi) {
    const auto& face = grid.faces()[fi];
    const int count = static_cast<int>(face.nodes.size());
    out.values[fi].assign(static_cast<std::size_t>(n_levels) * count,
                          Complex{});
    for (int level = 0; level < n_levels; ++level) {
      for (int p = 0; p < count; ++p) {
        const int node = face.nodes[p];
        const CVec g = grad(u, level, node);
        const CVec ag = A.at(node).apply(g);
        out.values[fi][static_cast<std::size_t>(level) * count + p] =
            dot(face.normal, ag);
      }
    }
  }

  // Accumulate the squared L2(Sigma_tau) norm by face columns.
  const double dt = u.dt();
  for (std::size_t fi = 0; fi < grid.faces().size(); ++fi) {
    const auto& face = grid.faces()[fi];
    const int count = static_cast<int>(face.nodes.size());
    for (int p = 0; p < count; ++p) {
      const int node = face.nodes[p];
      const double s = S.value(node);
      if (s < tau - 1e-14) continue;
      std::vector<Complex> col(n_levels);
      for (int level = 0; level < n_levels; ++level)
        col[level] = out.values[fi][static_cast<std::size_t>(level) * count + p];
      auto f = [&](double t) { return std::norm(quad_interp(col, dt, t)); };
      out.l2_sigma_sq +=
          grid.face_weight(face, p) *
          integrate_time_span(tau, s, dt, n_levels, f);
    }
  }
  return out;
}

double boundary_h1_sq(const Scenario& scenario, const Hypersurface& S,
                      double tau, int n_levels, double dt) {
  const auto& grid = *scenario.grid;
  if (!scenario.boundary) return 0.0;

  const auto& bnodes = grid.boundary_nodes();
  const int nb = static_cast<int>(bnodes.size());
  std::vector<std::vector<Complex>> f_cols(nb), ft_cols(nb);
  for (int b = 0; b < nb; ++b) {
    f_cols[b].resize(n_levels);
    ft_cols[b].resize(n_levels);
    const Vec x = grid.coord(bnodes[b]);
    for (int level = 0; level < n_levels; ++level) {
      const double t = level * dt;
      f_cols[b][level] = scenario.boundary.value(x, t);
      if (scenario.boundary.dt) {
        ft_cols[b][level] = scenario.boundary.dt(x, t);
      }
    }
    if (!scenario.boundary.dt) {
      for (int level = 0; level < n_levels; ++level) {
        const auto& c = f_cols[b];
        if (level == 0)
          ft_cols[b][level] = (-3.0 * c[0] + 4.0 * c[1] - c[2]) / (2.0 * dt);
        else if (level == n_levels - 1)
          ft_cols[b][level] =
              (3.0 * c[level] - 4.0 * c[level - 1] + c[level - 2]) / (2.0 * dt);
        else
          ft_cols[b][level] = (c[level + 1] - c[level - 1]) / (2.0 * dt);
      }
    }
  }
  std::vector<int> bindex_of_node(grid.num_nodes(), -1);
  for (int b = 0; b < nb; ++b) bindex_of_node[bnodes[b]] = b;

  // Tangential spatial derivative along each face (2D only).
  auto tangential_sq = [&](const SpatialGrid::Face& face, int p, double t) {
    if (grid.dim() == 1) return 0.0;
    const int count = static_cast<int>(face.nodes.size());
    const double h = face.axis == 0 ? grid.hy() : grid.hx();
    auto value = [&](int k) {
      const int b = bindex_of_node[face.nodes[k]];
      return quad_interp(f_cols[b], dt, t);
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

  double sum = 0.0;
  for (const auto& face : grid.faces()) {
    const int count = static_cast<int>(face.nodes.size());
    for (int p = 0; p < count; ++p) {
      const int node = face.nodes[p];
      const double s = S.value(node);
      if (s < tau - 1e-14) continue;
      const int b = bindex_of_node[node];
      auto f = [&](double t) {
        return std::norm(quad_interp(f_cols[b], dt, t)) +
               std::norm(quad_interp(ft_cols[b], dt, t)) +
               tangential_sq(face, p, t);
      };
      sum += grid.face_weight(face, p) *
             integrate_time_span(tau, s, dt, n_levels, f);
    }
  }
  return sum;
}

EnergyReport theorem_reports(const Scenario& scenario, const SolveResult& run,
                             const Hypersurface& S) {
  const auto& grid = *scenario.grid;
  const auto& A = scenario.A;
  EnergyReport report;

  const auto tr = trace(run.u, S, 0.0);
  report.e_surface = surface_energy(tr, S, A);
  report.e0 = initial_energy(grid, A, scenario.initial);
  report.lhs = std::abs(report.e_surface - report.e0);
  report.chain_rule_discrepancy = tr.chain_rule_discrepancy;

  const auto h1 = h1_surface_norm(tr, S, A);
  report.h1_value = h1.value;
  report.h1_bound = h1.bound;
  report.h1_ok = h1.within_bound;

  report.t2 = S.t2();
  report.bracket_t2 = std::sqrt(1.0 + report.t2 * report.t2);

  double grad_sq = 0.0;
  double u1_sq = 0.0;
  {
    auto g2 = [&](int node) {
      const CVec g = nodal_grad(grid, scenario.initial.u0, node);
      return std::norm(g.x) + std::norm(g.y);
    };
    grad_sq = integrate_omega(grid, g2);
    auto v2 = [&](int node) { return std::norm(scenario.initial.u1[node]); };
    u1_sq = integrate_omega(grid, v2);
  }
  report.norm_grad_u0 = std::sqrt(grad_sq);
  report.norm_u1 = std::sqrt(u1_sq);

  const auto masks = region_masks(S, 0.0, run.dt, run.u.n_levels());
  report.norm_f_h1_sigma0_sq =
      boundary_h1_sq(scenario, S, 0.0, run.u.n_levels(), run.dt);
  if (scenario.source) {
    report.norm_g_q0_sq =
        integrate_q(S, masks, [&](int node, double t) {
          return std::norm(scenario.source.value(grid.coord(node), t));
        }).value;
  }

  report.conormal_sq = conormal(run.u, A, S, 0.0).l2_sigma_sq;

  const double data_norm =
      std::sqrt(report.norm_f_h1_sigma0_sq) + std::sqrt(report.norm_g_q0_sq);
  const double bt = report.bracket_t2;
  report.rhs_energy_diff =
      std::sqrt(bt) *
      (report.norm_grad_u0 + report.norm_u1 + std::sqrt(bt) * data_norm) *
      data_norm;
  report.ratio_energy_diff = safe_ratio(report.lhs, report.rhs_energy_diff);

  report.rhs_energy_bound =
      (grad_sq + u1_sq) +
      bt * (report.norm_f_h1_sigma0_sq + report.norm_g_q0_sq);
  report.ratio_energy_bound =
      safe_ratio(report.e_surface, report.rhs_energy_bound);

  report.rhs_conormal =
      bt * (grad_sq + u1_sq) +
      bt * bt * (report.norm_g_q0_sq + report.norm_f_h1_sigma0_sq);
  report.ratio_conormal = safe_ratio(report.conormal_sq, report.rhs_conormal);

  report.zero_data =
      report.norm_f_h1_sigma0_sq < 1e-28 && report.norm_g_q0_sq < 1e-28;
  report.conservation_residual = report.lhs;
  return report;
}

}  // namespace slantwave
