#pragma once

#include <vector>

#include "slantwave/fields.hpp"
#include "slantwave/solver.hpp"

namespace slantwave {

/// Smooth cutoff with chi = 1 on |t| <= 1 and chi = 0 on |t| >= 2, built from
/// the standard mollifier-based smooth step.
struct Cutoff {
  double operator()(double t) const;
  double deriv(double t) const;
};

/// The time-derivative hierarchy at t = 0 implied by the equation:
/// u_k = d_t^{k-2} G(., 0) + div(A grad u_{k-2}) for k >= 2.
struct CompatHierarchy {
  std::vector<std::vector<Complex>> u;  // u[k] is a nodal array, k = 0..K
  int order() const { return static_cast<int>(u.size()) - 1; }
};

/// Builds the hierarchy with the discrete divergence (one-sided stencils at
/// boundary nodes). G's time derivatives at t = 0 come from the analytic
/// descriptor; a null source means G = 0.
CompatHierarchy build_hierarchy(const std::vector<Complex>& u0,
                                const std::vector<Complex>& u1,
                                const AnalyticField& source,
                                const CoefficientField& A, int K);

/// Default hierarchy order ceil(n/2) + 2 for spatial dimension n.
int default_compat_order(int dim);

/// Boundary datum produced by mollification, carrying the Taylor coefficients
/// used near t = 0 so order-k compatibility is checkable in closed form.
struct MollifiedBoundary {
  BoundaryField values;
  /// taylor[k][b]: k-th time derivative at t = 0 on boundary node b.
  std::vector<std::vector<Complex>> taylor;
  double epsilon = 0.0;
};

/// f_eps(x,t) = chi(t/eps) sum_k (t^k/k!) u_k(x) + (1 - chi(t/eps)) f(x,t).
/// Bit-exact equal to f for t >= 2 eps.
MollifiedBoundary mollify_high_order(const BoundaryField& f,
                                     const CompatHierarchy& hierarchy,
                                     double epsilon);

/// f_eps(x,t) = chi(t/eps) u0(x) + (1 - chi(t/eps)) f(x,t); order-zero
/// compatibility u0 = f_eps(., 0) holds exactly on boundary nodes.
MollifiedBoundary mollify_first_order(const BoundaryField& f,
                                      const std::vector<Complex>& u0,
                                      double epsilon);

/// Max over boundary nodes of |d_t^k f_eps(., 0) - u_k|, evaluated from the
/// construction's closed form (chi == 1 near t = 0, so the k-th derivative
/// at 0 is the stored Taylor coefficient).
double compatibility_residual(const MollifiedBoundary& f_eps,
                              const CompatHierarchy& hierarchy, int k);

/// ||a - b||^2_{H1(Sigma)} over the full lateral boundary: |diff|^2 plus
/// |d_t diff|^2 (plus the tangential derivative in 2D).
double h1_sigma_distance_sq(const BoundaryField& a, const BoundaryField& b);

}  // namespace slantwave
