#pragma once

#include <array>
#include <functional>
#include <vector>

#include "slantwave/energy.hpp"
#include "slantwave/solver.hpp"

namespace slantwave {

/// Interior vector field equal to A nu_Sigma on the boundary, with its
/// Jacobian d_j phi_k recorded per node for the volume terms of the
/// multiplier identity.
struct MultiplierField {
  std::vector<Vec> phi;
  /// jac[node][j][k] = d phi_k / d x_j.
  std::vector<std::array<std::array<double, 2>, 2>> jac;
  double sup_interior = 0.0;
  double sup_boundary = 0.0;
};

/// Ramp-based extension: phi(x) = w(d(x)) (A nu_Sigma)(nearest boundary
/// point), w smooth with w(0) = 1 and w = 0 beyond d0 = min side / 4. Corner
/// neighborhoods in 2D blend the two face values by relative distance.
MultiplierField extend_multiplier(const CoefficientField& A,
                                  const SpatialGrid& grid);

/// Pointwise residual of the time-multiplier identity
///   2 Re{conj(u_t) [u_tt - div(A grad u)]}
///     = div_{x,t}[-2 conj(u_t) A grad u, |u_t|^2 + |grad u|_A^2]
/// with second-order inner stencils and a fourth-order outer divergence.
/// Defined at interior points at least 3 nodes/levels away from boundaries.
double residual_energy_identity(const SpaceTimeField& u,
                                const CoefficientField& A, int node,
                                int level);

/// Pointwise residual of the space-multiplier identity (the phi form),
/// including the volume terms (div phi)(|u_t|^2 - |grad u|_A^2),
/// -(phi . grad A)(grad u, grad u) and 2 (d_j phi_k) Re(conj(u_k) a_jl u_l).
/// Requires an analytic gradient of A.
double residual_multiplier_identity(const SpaceTimeField& u,
                                    const CoefficientField& A,
                                    const MultiplierField& phi, int node,
                                    int level);

/// Max interior residual of one identity over the admissible stencil range.
struct IdentitySweep {
  double max_residual = 0.0;
  int argmax_node = -1;
  int argmax_level = -1;
};
IdentitySweep sweep_energy_identity(const SpaceTimeField& u,
                                    const CoefficientField& A);
IdentitySweep sweep_multiplier_identity(const SpaceTimeField& u,
                                        const CoefficientField& A,
                                        const MultiplierField& phi);

/// Flux balance over Q_tau:
///   residual = 2 Re int_{Q_tau} conj(u_t) G + e(tau)
///            + 2 Re int_{Sigma_tau} conj(u_t) u_{nu,A} - E_tau(u).
struct FluxBalance {
  double q_source = 0.0;
  double e_horizontal = 0.0;
  double sigma_term = 0.0;
  double e_partial = 0.0;
  double residual = 0.0;
};
FluxBalance flux_balance(const SolveResult& run, const Scenario& scenario,
                         const Hypersurface& S, double tau);

/// Multiplier balance over Q_tau: I1 (Sigma, simplified via phi = A nu),
/// I2 (Gamma, reduced surface form), I3 (volume terms), the slice term at
/// t = tau, and the source integral 2 Re int (phi . grad conj(u)) G.
struct MultiplierBalance {
  double i1 = 0.0;
  double i2 = 0.0;
  double i2_raw = 0.0;  // same integral from the unreduced integrand
  double i3 = 0.0;
  double slice_term = 0.0;
  double source_term = 0.0;
  double residual = 0.0;        // i1 + i2 + i3 - slice - source
  double i2_form_gap = 0.0;     // |i2 - i2_raw|
};
MultiplierBalance multiplier_balance(const SolveResult& run,
                                     const Scenario& scenario,
                                     const Hypersurface& S,
                                     const MultiplierField& phi, double tau);

/// Small dense matrix algebra for the gradient decomposition at one point.
struct GradientDecomposition {
  std::vector<double> m;   // row-major d x d
  double nu_a_sq = 0.0;    // |nu|_A^2
  double product = 0.0;    // |nu|_A^2 * M_11, equals 1 exactly
  double expansion_max_err = 0.0;
};

/// Builds E = (A nu, e_2, ..., e_d) from an orthonormal frame, forms
/// M = E^{-1} A E^{-T}, checks |nu|_A^2 M_11 = 1 and verifies the quadratic
/// expansion of |xi|_A^2 in (u_{nu,A}, tangential components) at the given
/// test gradients.
GradientDecomposition gradient_decomposition(
    const std::vector<double>& a, const std::vector<double>& frame, int d,
    const std::vector<std::vector<Complex>>& test_gradients);

/// Closed-form check of |grad u|^2 = |x . grad u|^2 + |X_12 u|^2 on the unit
/// circle (A = I, 2D). The sample carries u's exact partial derivatives.
struct CirclePointSample {
  std::function<Complex(Vec)> u;
  std::function<Complex(Vec)> du_dx;
  std::function<Complex(Vec)> du_dy;
};
double sphere_decomposition_check(const CirclePointSample& sample,
                                  int n_points);

/// Minimum over K > 0 of 2 (K/D) e^{D/K} - 1.5 (K/D); scale-invariant in D.
struct GronwallMin {
  double k_star = 0.0;
  double value = 0.0;
};
GronwallMin gronwall_coefficient_min(double D);

}  // namespace slantwave
