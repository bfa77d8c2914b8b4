#include "slantwave/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slantwave/smooth.hpp"

namespace slantwave {

namespace {

double ramp(double d, double d0) {
  return 1.0 - smooth_step(d / d0);
}
double ramp_deriv(double d, double d0) {
  return -smooth_step_deriv(d / d0) / d0;
}

}  // namespace

MultiplierField extend_multiplier(const CoefficientField& A,
                                  const SpatialGrid& grid) {
  MultiplierField out;
  const int n = grid.num_nodes();
  out.phi.resize(n);
  out.jac.assign(n, {{{0.0, 0.0}, {0.0, 0.0}}});
  const auto& dom = grid.domain();

  for (int node : grid.boundary_nodes()) {
    // sup over the boundary of |A nu| per face (corners checked per face).
    for (const auto& face : grid.faces()) {
      const int i = grid.ix(node);
      const int j = grid.iy(node);
      const bool on_face = face.axis == 0
                               ? (face.side == 0 ? i == 0 : i == grid.nx() - 1)
                               : (face.side == 0 ? j == 0 : j == grid.ny() - 1);
      if (!on_face) continue;
      out.sup_boundary =
          std::max(out.sup_boundary, norm(A.at(node).apply(face.normal)));
    }
  }

  if (grid.dim() == 1) {
    const double lo = dom.bounds[0].first;
    const double hi = dom.bounds[0].second;
    const double d0 = (hi - lo) / 4.0;
    const double v_lo = -A.at(grid.index(0)).a11;         // A nu at the left
    const double v_hi = A.at(grid.index(grid.nx() - 1)).a11;
    for (int node = 0; node < n; ++node) {
      const double x = grid.coord(node).x;
      const double dl = x - lo;
      const double dr = hi - x;
      out.phi[node] = Vec{ramp(dl, d0) * v_lo + ramp(dr, d0) * v_hi, 0.0};
      out.jac[node][0][0] =
          ramp_deriv(dl, d0) * v_lo - ramp_deriv(dr, d0) * v_hi;
    }
  } else {
    const double d0 =
        std::min(dom.length(0), dom.length(1)) / 4.0;
    auto face_value = [&](const SpatialGrid::Face& face, Vec x) -> Vec {
      // A at the projection of x onto the face, contracted with its normal.
      Vec p = x;
      const double bound = face.side == 0 ? dom.bounds[face.axis].first
                                          : dom.bounds[face.axis].second;
      p[face.axis] = bound;
      SymMat a;
      try {
        a = A.at_point(p);
      } catch (const std::exception&) {
        // Nodal-only field: use the nearest grid node on the face.
        const int i = std::clamp(
            static_cast<int>(std::lround((p.x - dom.bounds[0].first) / grid.hx())),
            0, grid.nx() - 1);
        const int j = std::clamp(
            static_cast<int>(std::lround((p.y - dom.bounds[1].first) / grid.hy())),
            0, grid.ny() - 1);
        a = A.at(grid.index(i, j));
      }
      return a.apply(face.normal);
    };
    auto phi_at = [&](Vec x) -> Vec {
      // Distances to the (at most two) nearby faces; blend by relative
      // distance so each face keeps its exact value on itself.
      const SpatialGrid::Face* near[2] = {nullptr, nullptr};
      double dist[2] = {0.0, 0.0};
      int count = 0;
      for (const auto& face : grid.faces()) {
        const double bound = face.side == 0 ? dom.bounds[face.axis].first
                                            : dom.bounds[face.axis].second;
        const double d = std::abs(x[face.axis] - bound);
        if (d < d0 && count < 2) {
          near[count] = &face;
          dist[count] = d;
          ++count;
        }
      }
      if (count == 0) return Vec{};
      if (count == 1)
        return ramp(dist[0], d0) * face_value(*near[0], x);
      const double den = dist[0] + dist[1];
      const double mu0 = den > 0.0 ? dist[1] / den : 0.5;
      const double mu1 = den > 0.0 ? dist[0] / den : 0.5;
      const double w = ramp(std::min(dist[0], dist[1]), d0);
      return w * (mu0 * face_value(*near[0], x) +
                  mu1 * face_value(*near[1], x));
    };
    const double h_fd = 1e-6;
    for (int node = 0; node < n; ++node) {
      const Vec x = grid.coord(node);
      out.phi[node] = phi_at(x);
      for (int j = 0; j < 2; ++j) {
        Vec xp = x, xm = x;
        xp[j] += h_fd;
        xm[j] -= h_fd;
        const Vec pp = phi_at(xp);
        const Vec pm = phi_at(xm);
        out.jac[node][j][0] = (pp.x - pm.x) / (2.0 * h_fd);
        out.jac[node][j][1] = (pp.y - pm.y) / (2.0 * h_fd);
      }
    }
  }

  for (int node = 0; node < n; ++node)
    out.sup_interior = std::max(out.sup_interior, norm(out.phi[node]));
  return out;
}

namespace {

constexpr int kMargin = 3;  // outer 4th-order stencil (2) + inner stencil (1)

void require_interior(const SpaceTimeField& u, int node, int level) {
  const auto& grid = u.grid();
  const int i = grid.ix(node);
  const int j = grid.iy(node);
  bool ok = i >= kMargin && i < grid.nx() - kMargin && level >= kMargin &&
            level < u.n_levels() - kMargin;
  if (grid.dim() == 2) ok = ok && j >= kMargin && j < grid.ny() - kMargin;
  if (!ok)
    throw std::out_of_range(
        "identity residual: point too close to the boundary");
}

Complex ut_centered(const SpaceTimeField& u, int level, int node) {
  return (u.at(level + 1, node) - u.at(level - 1, node)) / (2.0 * u.dt());
}

Complex utt_centered(const SpaceTimeField& u, int level, int node) {
  return (u.at(level + 1, node) - 2.0 * u.at(level, node) +
          u.at(level - 1, node)) /
         (u.dt() * u.dt());
}

/// Fourth-order centered first derivative of a sampled flux; exact through
/// cubics, so the polynomial-exactness checks pass with honest differencing.
template <typename F>
double d1_fourth_order(const F& f, double h) {
  return (-f(2) + 8.0 * f(1) - 8.0 * f(-1) + f(-2)) / (12.0 * h);
}

}  // namespace

double residual_energy_identity(const SpaceTimeField& u,
                                const CoefficientField& A, int node,
                                int level) {
  require_interior(u, node, level);
  const auto& grid = u.grid();

  const Complex ut = ut_centered(u, level, node);
  const Complex wave =
      utt_centered(u, level, node) - div_a_grad(A, u, level, node);
  const double lhs = 2.0 * std::real(std::conj(ut) * wave);

  // Space-time flux: F_x = -2 conj(u_t) A grad u, F_t = |u_t|^2 + |grad u|_A^2.
  auto flux_x = [&](int axis, int off) {
    const int i = grid.ix(node);
    const int j = grid.iy(node);
    const int nn =
        axis == 0 ? grid.index(i + off, j) : grid.index(i, j + off);
    const CVec g = grad(u, level, nn);
    const CVec ag = A.at(nn).apply(g);
    const Complex utn = ut_centered(u, level, nn);
    return std::real(-2.0 * std::conj(utn) * ag[axis]);
  };
  auto flux_t = [&](int off) {
    const CVec g = grad(u, level + off, node);
    const Complex utn = ut_centered(u, level + off, node);
    return std::norm(utn) + A.at(node).quad(g);
  };

  double rhs = d1_fourth_order([&](int o) { return flux_x(0, o); }, grid.hx());
  if (grid.dim() == 2)
    rhs += d1_fourth_order([&](int o) { return flux_x(1, o); }, grid.hy());
  rhs += d1_fourth_order(flux_t, u.dt());
  return lhs - rhs;
}

double residual_multiplier_identity(const SpaceTimeField& u,
                                    const CoefficientField& A,
                                    const MultiplierField& phi, int node,
                                    int level) {
  require_interior(u, node, level);
  if (!A.has_analytic_gradient())
    throw std::runtime_error(
        "residual_multiplier_identity: grad A undefined (non-analytic A)");
  const auto& grid = u.grid();

  auto phi_dot_grad_conj = [&](int nn, int lvl) {
    const CVec g = grad(u, lvl, nn);
    const Vec p = phi.phi[nn];
    return p.x * std::conj(g.x) + p.y * std::conj(g.y);
  };

  const Complex wave =
      utt_centered(u, level, node) - div_a_grad(A, u, level, node);
  const double lhs =
      2.0 * std::real(phi_dot_grad_conj(node, level) * wave);

  // Spatial flux: phi (|grad u|_A^2 - |u_t|^2) - 2 (phi . grad conj u) A grad u.
  auto flux_x = [&](int axis, int off) {
    const int i = grid.ix(node);
    const int j = grid.iy(node);
    const int nn =
        axis == 0 ? grid.index(i + off, j) : grid.index(i, j + off);
    const CVec g = grad(u, level, nn);
    const CVec ag = A.at(nn).apply(g);
    const Complex utn = ut_centered(u, level, nn);
    const double scalar = A.at(nn).quad(g) - std::norm(utn);
    return std::real(phi.phi[nn][axis] * scalar -
                     2.0 * phi_dot_grad_conj(nn, level) * ag[axis]);
  };
  // Time flux: 2 (phi . grad conj u) u_t.
  auto flux_t = [&](int off) {
    const Complex utn = ut_centered(u, level + off, node);
    return std::real(2.0 * phi_dot_grad_conj(node, level + off) * utn);
  };

  double rhs = d1_fourth_order([&](int o) { return flux_x(0, o); }, grid.hx());
  if (grid.dim() == 2)
    rhs += d1_fourth_order([&](int o) { return flux_x(1, o); }, grid.hy());
  rhs += d1_fourth_order(flux_t, u.dt());

  // Volume terms at the point itself.
  const CVec g = grad(u, level, node);
  const CVec ag = A.at(node).apply(g);
  const Complex ut = ut_centered(u, level, node);
  const auto& jac = phi.jac[node];
  const double div_phi = jac[0][0] + (grid.dim() == 2 ? jac[1][1] : 0.0);
  double volume = div_phi * (std::norm(ut) - A.at(node).quad(g));
  for (int j = 0; j < grid.dim(); ++j) {
    volume -= phi.phi[node][j] * A.d_axis(node, j).quad(g);
  }
  for (int j = 0; j < grid.dim(); ++j) {
    for (int k = 0; k < grid.dim(); ++k) {
      volume +=
          2.0 * jac[j][k] * std::real(std::conj(g[k]) * ag[j]);
    }
  }
  rhs += volume;
  return lhs - rhs;
}

IdentitySweep sweep_energy_identity(const SpaceTimeField& u,
                                    const CoefficientField& A) {
  IdentitySweep sweep;
  const auto& grid = u.grid();
  for (int level = kMargin; level < u.n_levels() - kMargin; ++level) {
    for (int node = 0; node < grid.num_nodes(); ++node) {
      const int i = grid.ix(node);
      const int j = grid.iy(node);
      if (i < kMargin || i >= grid.nx() - kMargin) continue;
      if (grid.dim() == 2 && (j < kMargin || j >= grid.ny() - kMargin))
        continue;
      const double r = std::abs(residual_energy_identity(u, A, node, level));
      if (r > sweep.max_residual) {
        sweep.max_residual = r;
        sweep.argmax_node = node;
        sweep.argmax_level = level;
      }
    }
  }
  return sweep;
}

IdentitySweep sweep_multiplier_identity(const SpaceTimeField& u,
                                        const CoefficientField& A,
                                        const MultiplierField& phi) {
  IdentitySweep sweep;
  const auto& grid = u.grid();
  for (int level = kMargin; level < u.n_levels() - kMargin; ++level) {
    for (int node = 0; node < grid.num_nodes(); ++node) {
      const int i = grid.ix(node);
      const int j = grid.iy(node);
      if (i < kMargin || i >= grid.nx() - kMargin) continue;
      if (grid.dim() == 2 && (j < kMargin || j >= grid.ny() - kMargin))
        continue;
      const double r =
          std::abs(residual_multiplier_identity(u, A, phi, node, level));
      if (r > sweep.max_residual) {
        sweep.max_residual = r;
        sweep.argmax_node = node;
        sweep.argmax_level = level;
      }
    }
  }
  return sweep;
}

FluxBalance flux_balance(const SolveResult& run, const Scenario& scenario,
                         const Hypersurface& S, double tau) {
  const auto& u = run.u;
  const auto& A = scenario.A;
  const auto& grid = *scenario.grid;
  const auto masks = region_masks(S, tau, run.dt, u.n_levels());

  FluxBalance out;
  if (scenario.source) {
    out.q_source =
        integrate_q(S, masks, [&](int node, double t) {
          const Complex ut = interp_time(u, node, t).ut;
          return 2.0 * std::real(std::conj(ut) *
                                 scenario.source.value(grid.coord(node), t));
        }).value;
  }
  out.e_horizontal = horizontal_energy(u, A, S, tau);
  out.sigma_term =
      integrate_sigma_faces(
          S, masks,
          [&](const SpatialGrid::Face& face, int, int node, double t) {
            const Complex ut = interp_time(u, node, t).ut;
            const CVec g = grad_at_time(u, node, t);
            const Complex conormal_value = dot(face.normal, A.at(node).apply(g));
            return 2.0 * std::real(std::conj(ut) * conormal_value);
          })
          .value;
  out.e_partial = partial_energy(u, S, A, tau);
  out.residual =
      out.q_source + out.e_horizontal + out.sigma_term - out.e_partial;
  return out;
}

MultiplierBalance multiplier_balance(const SolveResult& run,
                                     const Scenario& scenario,
                                     const Hypersurface& S,
                                     const MultiplierField& phi, double tau) {
  const auto& u = run.u;
  const auto& A = scenario.A;
  const auto& grid = *scenario.grid;
  const auto masks = region_masks(S, tau, run.dt, u.n_levels());

  MultiplierBalance out;

  // I1 on Sigma_tau, simplified by phi = A nu there:
  // |nu|_A^2 (|grad u|_A^2 - |u_t|^2) - 2 |u_{nu,A}|^2.
  out.i1 = integrate_sigma_faces(
               S, masks,
               [&](const SpatialGrid::Face& face, int, int node, double t) {
                 const CVec g = grad_at_time(u, node, t);
                 const Complex ut = interp_time(u, node, t).ut;
                 const SymMat a = A.at(node);
                 const double nu_a_sq = a.quad(face.normal);
                 const Complex un = dot(face.normal, a.apply(g));
                 return nu_a_sq * (a.quad(g) - std::norm(ut)) -
                        2.0 * std::norm(un);
               })
               .value;

  // I2 on Gamma_{S,tau}: reduced surface form and the raw bulk form.
  const auto tr = trace(u, S, tau);
  auto node_grad_s = [&](int node) {
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
    return (1.0 / count) * gs;
  };
  auto ut_weight = [&](int node, Vec gs) {
    return 1.0 - A.at(node).quad(CVec{Complex{gs.x, 0.0}, Complex{gs.y, 0.0}});
  };
  auto i2_reduced = [&](int node) {
    const Vec p = phi.phi[node];
    const Vec gs = node_grad_s(node);
    const double w = ut_weight(node, gs);
    const CVec sg = tr.surf_grad[node];
    const SymMat a = A.at(node);
    const Complex phi_grad_conj = p.x * std::conj(sg.x) + p.y * std::conj(sg.y);
    const CVec asg = a.apply(sg);
    const Complex bracket = dot(gs, asg) + w * tr.ut[node];
    return -dot(p, gs) * (a.quad(sg) + w * std::norm(tr.ut[node])) +
           2.0 * std::real(phi_grad_conj * bracket);
  };
  auto i2_raw = [&](int node) {
    // (nu_x . phi)(|grad u|_A^2 - |u_t|^2) + 2 (phi . grad conj u)
    // (nu_t u_t - nu_x . A grad u), times the surface measure factor; the
    // normal denominators cancel against it.
    const Vec p = phi.phi[node];
    const Vec gs = node_grad_s(node);
    const CVec g = tr.bulk_grad[node];
    const SymMat a = A.at(node);
    const Complex ut = tr.ut[node];
    const Complex phi_grad_conj =
        p.x * std::conj(g.x) + p.y * std::conj(g.y);
    const CVec agr = a.apply(g);
    return -dot(p, gs) * (a.quad(g) - std::norm(ut)) +
           2.0 * std::real(phi_grad_conj * (ut + dot(gs, agr)));
  };
  out.i2 = integrate_above_level(S, tau, i2_reduced).value;
  out.i2_raw = integrate_above_level(S, tau, i2_raw).value;
  out.i2_form_gap = std::abs(out.i2 - out.i2_raw);

  // I3 over Q_tau: the volume terms.
  out.i3 = integrate_q(S, masks, [&](int node, double t) {
             const CVec g = grad_at_time(u, node, t);
             const Complex ut = interp_time(u, node, t).ut;
             const SymMat a = A.at(node);
             const CVec ag = a.apply(g);
             const auto& jac = phi.jac[node];
             const double div_phi =
                 jac[0][0] + (grid.dim() == 2 ? jac[1][1] : 0.0);
             double value = div_phi * (std::norm(ut) - a.quad(g));
             for (int j = 0; j < grid.dim(); ++j)
               value -= phi.phi[node][j] * A.d_axis(node, j).quad(g);
             for (int j = 0; j < grid.dim(); ++j)
               for (int k = 0; k < grid.dim(); ++k)
                 value += 2.0 * jac[j][k] * std::real(std::conj(g[k]) * ag[j]);
             return value;
           }).value;

  // Slice term at t = tau over H_tau.
  out.slice_term =
      integrate_above_level(S, tau, [&](int node) {
        const CVec g = grad_at_time(u, node, tau);
        Complex ut;
        if (std::abs(tau) < 1e-12 && u.has_initial_velocity())
          ut = u.initial_velocity()[node];
        else
          ut = interp_time(u, node, tau).ut;
        const Vec p = phi.phi[node];
        const Complex phi_grad_conj =
            p.x * std::conj(g.x) + p.y * std::conj(g.y);
        return std::real(2.0 * phi_grad_conj * ut);
      }).value;

  if (scenario.source) {
    out.source_term =
        integrate_q(S, masks, [&](int node, double t) {
          const CVec g = grad_at_time(u, node, t);
          const Vec p = phi.phi[node];
          const Complex phi_grad_conj =
              p.x * std::conj(g.x) + p.y * std::conj(g.y);
          return 2.0 * std::real(phi_grad_conj *
                                 scenario.source.value(grid.coord(node), t));
        }).value;
  }

  out.residual =
      out.i1 + out.i2 + out.i3 - out.slice_term - out.source_term;
  return out;
}

namespace {

/// Gauss-Jordan inverse with partial pivoting for small dense matrices.
std::vector<double> invert_dense(std::vector<double> m, int d) {
  std::vector<double> inv(d * d, 0.0);
  for (int i = 0; i < d; ++i) inv[i * d + i] = 1.0;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(m[r * d + col]) > std::abs(m[pivot * d + col])) pivot = r;
    if (std::abs(m[pivot * d + col]) < 1e-14)
      throw std::runtime_error("gradient_decomposition: singular frame matrix");
    if (pivot != col) {
      for (int c = 0; c < d; ++c) {
        std::swap(m[pivot * d + c], m[col * d + c]);
        std::swap(inv[pivot * d + c], inv[col * d + c]);
      }
    }
    const double diag = m[col * d + col];
    for (int c = 0; c < d; ++c) {
      m[col * d + c] /= diag;
      inv[col * d + c] /= diag;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double factor = m[r * d + col];
      if (factor == 0.0) continue;
      for (int c = 0; c < d; ++c) {
        m[r * d + c] -= factor * m[col * d + c];
        inv[r * d + c] -= factor * inv[col * d + c];
      }
    }
  }
  return inv;
}

}  // namespace

GradientDecomposition gradient_decomposition(
    const std::vector<double>& a, const std::vector<double>& frame, int d,
    const std::vector<std::vector<Complex>>& test_gradients) {
  if (static_cast<int>(a.size()) != d * d ||
      static_cast<int>(frame.size()) != d * d)
    throw std::invalid_argument("gradient_decomposition: size mismatch");

  // E columns: A e_1, e_2, ..., e_d (frame rows are the orthonormal vectors).
  std::vector<double> e(d * d, 0.0);
  for (int r = 0; r < d; ++r) {
    double av = 0.0;
    for (int c = 0; c < d; ++c) av += a[r * d + c] * frame[c];
    e[r * d + 0] = av;
    for (int col = 1; col < d; ++col) e[r * d + col] = frame[col * d + r];
  }

  const auto einv = invert_dense(e, d);
  // M = E^{-1} A E^{-T}.
  std::vector<double> tmp(d * d, 0.0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += einv[r * d + k] * a[k * d + c];
      tmp[r * d + c] = s;
    }
  GradientDecomposition out;
  out.m.assign(d * d, 0.0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += tmp[r * d + k] * einv[c * d + k];
      out.m[r * d + c] = s;
    }

  double nu_a_sq = 0.0;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      nu_a_sq += frame[r] * a[r * d + c] * frame[c];
  out.nu_a_sq = nu_a_sq;
  out.product = nu_a_sq * out.m[0];

  for (const auto& xi : test_gradients) {
    if (static_cast<int>(xi.size()) != d)
      throw std::invalid_argument("gradient_decomposition: gradient dim");
    double direct = 0.0;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        direct += a[r * d + c] * std::real(std::conj(xi[r]) * xi[c]);
    // eta = E^T xi; eta_1 is the conormal component u_{nu,A}.
    std::vector<Complex> eta(d, Complex{});
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < d; ++r) eta[c] += e[r * d + c] * xi[r];
    double via = 0.0;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        via += out.m[r * d + c] * std::real(std::conj(eta[r]) * eta[c]);
    out.expansion_max_err =
        std::max(out.expansion_max_err, std::abs(direct - via));
  }
  return out;
}

double sphere_decomposition_check(const CirclePointSample& sample,
                                  int n_points) {
  constexpr double kPi = 3.14159265358979323846;
  double worst = 0.0;
  for (int k = 0; k < n_points; ++k) {
    const double theta = 2.0 * kPi * k / n_points;
    const Vec x{std::cos(theta), std::sin(theta)};
    const Complex dx = sample.du_dx(x);
    const Complex dy = sample.du_dy(x);
    const double lhs = std::norm(dx) + std::norm(dy);
    const Complex radial = x.x * dx + x.y * dy;
    const Complex angular = x.x * dy - x.y * dx;  // X_12 u
    const double rhs = std::norm(radial) + std::norm(angular);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

GronwallMin gronwall_coefficient_min(double D) {
  if (!(D > 0.0))
    throw std::invalid_argument("gronwall_coefficient_min: D must be > 0");
  auto g = [D](double k) {
    const double s = k / D;
    return 2.0 * s * std::exp(1.0 / s) - 1.5 * s;
  };
  // Golden-section search; g is strictly unimodal on (0, inf).
  double a = 0.05 * D;
  double b = 50.0 * D;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = g(c);
  double fd = g(d);
  while (b - a > 1e-12 * D) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = g(d);
    }
  }
  GronwallMin out;
  out.k_star = 0.5 * (a + b);
  out.value = g(out.k_star);
  return out;
}

}  // namespace slantwave
