#include <cmath>
#include <stdexcept>

#include "slantwave/smooth.hpp"
#include "slantwave/solver.hpp"

namespace slantwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

InitialData sample_initial(const SpatialGrid& grid, const AnalyticField& u) {
  InitialData data;
  data.u0.resize(grid.num_nodes());
  data.u1.resize(grid.num_nodes());
  for (int node = 0; node < grid.num_nodes(); ++node) {
    const Vec x = grid.coord(node);
    data.u0[node] = u.value(x, 0.0);
    data.u1[node] = u.dt(x, 0.0);
  }
  return data;
}

/// d^k/dt^k cos(w t) at t = 0.
double cos_dtk0(double w, int k) {
  switch (k % 4) {
    case 0: return std::pow(w, k);
    case 2: return -std::pow(w, k);
    default: return 0.0;
  }
}

Scenario standing(const ManufacturedParams& p) {
  Scenario s;
  s.name = "standing";
  s.grid = std::make_shared<SpatialGrid>(
      Domain::interval(0.0, 1.0, p.t_final), p.n);
  s.A = CoefficientField::identity(*s.grid);
  AnalyticField u;
  u.value = [](Vec x, double t) {
    return Complex{std::sin(kPi * x.x) * std::cos(kPi * t), 0.0};
  };
  u.dt = [](Vec x, double t) {
    return Complex{-kPi * std::sin(kPi * x.x) * std::sin(kPi * t), 0.0};
  };
  u.grad = [](Vec x, double t) {
    return CVec{Complex{kPi * std::cos(kPi * x.x) * std::cos(kPi * t), 0.0},
                Complex{}};
  };
  u.dt_k_at0 = [](Vec x, int k) {
    return Complex{std::sin(kPi * x.x) * cos_dtk0(kPi, k), 0.0};
  };
  s.exact = u;
  s.boundary = zero_field();
  s.source = AnalyticField{};
  s.initial = sample_initial(*s.grid, u);
  return s;
}

Scenario variable_a(const ManufacturedParams& p) {
  Scenario s;
  s.name = "variable-a";
  s.grid = std::make_shared<SpatialGrid>(
      Domain::interval(0.0, 1.0, p.t_final), p.n);
  s.A = CoefficientField::scalar_sin(*s.grid, 1.0, 0.5, Vec{1.0, 0.0});
  const double ph = p.phase;
  AnalyticField u;
  u.value = [ph](Vec x, double t) {
    return Complex{std::sin(kPi * x.x + ph) * std::cos(kPi * t), 0.0};
  };
  u.dt = [ph](Vec x, double t) {
    return Complex{-kPi * std::sin(kPi * x.x + ph) * std::sin(kPi * t), 0.0};
  };
  u.grad = [ph](Vec x, double t) {
    return CVec{Complex{kPi * std::cos(kPi * x.x + ph) * std::cos(kPi * t),
                        0.0},
                Complex{}};
  };
  u.dt_k_at0 = [ph](Vec x, int k) {
    return Complex{std::sin(kPi * x.x + ph) * cos_dtk0(kPi, k), 0.0};
  };
  s.exact = u;
  s.boundary = u;  // nonzero when phase != 0
  // G = u_tt - (a u_x)_x for a(x) = 1 + 0.5 sin(pi x).
  AnalyticField g;
  g.value = [ph](Vec x, double t) {
    return Complex{-0.5 * kPi * kPi * std::cos(2.0 * kPi * x.x + ph) *
                       std::cos(kPi * t),
                   0.0};
  };
  g.dt = [ph](Vec x, double t) {
    return Complex{0.5 * kPi * kPi * kPi * std::cos(2.0 * kPi * x.x + ph) *
                       std::sin(kPi * t),
                   0.0};
  };
  g.dt_k_at0 = [ph](Vec x, int k) {
    return Complex{-0.5 * kPi * kPi * std::cos(2.0 * kPi * x.x + ph) *
                       cos_dtk0(kPi, k),
                   0.0};
  };
  s.source = g;
  s.initial = sample_initial(*s.grid, u);
  return s;
}

Scenario traveling(const ManufacturedParams& p) {
  Scenario s;
  s.name = "traveling";
  s.grid = std::make_shared<SpatialGrid>(
      Domain::interval(0.0, 1.0, p.t_final), p.n);
  s.A = CoefficientField::identity(*s.grid);
  const Complex i{0.0, 1.0};
  AnalyticField u;
  u.value = [i](Vec x, double t) { return std::exp(i * kPi * (x.x - t)); };
  u.dt = [i](Vec x, double t) {
    return -i * kPi * std::exp(i * kPi * (x.x - t));
  };
  u.grad = [i](Vec x, double t) {
    return CVec{i * kPi * std::exp(i * kPi * (x.x - t)), Complex{}};
  };
  u.dt_k_at0 = [i](Vec x, int k) {
    return std::pow(-i * kPi, k) * std::exp(i * kPi * x.x);
  };
  s.exact = u;
  s.boundary = u;
  s.source = AnalyticField{};
  s.initial = sample_initial(*s.grid, u);
  return s;
}

Scenario gaussian_bump(const ManufacturedParams& p) {
  Scenario s;
  s.name = "gaussian-bump";
  s.grid = std::make_shared<SpatialGrid>(
      Domain::interval(p.domain_lo, p.domain_hi, p.t_final), p.n);
  s.A = CoefficientField::identity(*s.grid);
  s.boundary = zero_field();
  s.source = AnalyticField{};
  const double c = p.center;
  const double r = p.radius;
  const double amp = p.amplitude;
  s.initial.u0.resize(s.grid->num_nodes());
  s.initial.u1.assign(s.grid->num_nodes(), Complex{});
  for (int node = 0; node < s.grid->num_nodes(); ++node) {
    const Vec x = s.grid->coord(node);
    s.initial.u0[node] = Complex{amp * smooth_bump((x.x - c) / r), 0.0};
  }
  return s;
}

Scenario standing_2d(const ManufacturedParams& p) {
  Scenario s;
  s.name = "standing-2d";
  s.grid = std::make_shared<SpatialGrid>(
      Domain::rectangle(0.0, 1.0, 0.0, 1.0, p.t_final), p.n, p.n);
  s.A = CoefficientField::identity(*s.grid);
  const double w = std::sqrt(2.0) * kPi;
  AnalyticField u;
  u.value = [w](Vec x, double t) {
    return Complex{std::sin(kPi * x.x) * std::sin(kPi * x.y) * std::cos(w * t),
                   0.0};
  };
  u.dt = [w](Vec x, double t) {
    return Complex{-w * std::sin(kPi * x.x) * std::sin(kPi * x.y) *
                       std::sin(w * t),
                   0.0};
  };
  u.grad = [w](Vec x, double t) {
    const double ct = std::cos(w * t);
    return CVec{
        Complex{kPi * std::cos(kPi * x.x) * std::sin(kPi * x.y) * ct, 0.0},
        Complex{kPi * std::sin(kPi * x.x) * std::cos(kPi * x.y) * ct, 0.0}};
  };
  u.dt_k_at0 = [w](Vec x, int k) {
    return Complex{std::sin(kPi * x.x) * std::sin(kPi * x.y) * cos_dtk0(w, k),
                   0.0};
  };
  s.exact = u;
  s.boundary = zero_field();
  s.source = AnalyticField{};
  s.initial = sample_initial(*s.grid, u);
  return s;
}

}  // namespace

Scenario manufactured(const std::string& name, const ManufacturedParams& p) {
  if (name == "standing") return standing(p);
  if (name == "variable-a") return variable_a(p);
  if (name == "traveling") return traveling(p);
  if (name == "gaussian-bump") return gaussian_bump(p);
  if (name == "standing-2d") return standing_2d(p);
  throw std::invalid_argument("manufactured: unknown scenario '" + name + "'");
}

Scenario manufactured(
    const std::string& name,
    const std::function<double(const std::string&, double)>& param) {
  ManufacturedParams p;
  if (param) {
    p.n = static_cast<int>(param("n", p.n));
    p.t_final = param("t_final", p.t_final);
    p.phase = param("phase", p.phase);
    p.center = param("center", p.center);
    p.radius = param("radius", p.radius);
    p.amplitude = param("amplitude", p.amplitude);
    p.domain_lo = param("domain_lo", p.domain_lo);
    p.domain_hi = param("domain_hi", p.domain_hi);
  }
  return manufactured(name, p);
}

}  // namespace slantwave
