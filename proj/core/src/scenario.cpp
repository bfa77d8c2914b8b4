#include "slantwave/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "slantwave/smooth.hpp"

namespace slantwave {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec vec_from(const json& j) {
  Vec v;
  if (j.is_array()) {
    if (!j.empty()) v.x = j[0].get<double>();
    if (j.size() > 1) v.y = j[1].get<double>();
  } else if (j.is_number()) {
    v.x = j.get<double>();
  }
  return v;
}

Domain domain_from_config(const json& spec) {
  const std::string kind = spec.value("kind", "interval");
  const double T = spec.value("time_horizon", 1.0);
  const auto& b = spec.at("bounds");
  if (kind == "interval")
    return Domain::interval(b[0][0].get<double>(), b[0][1].get<double>(), T);
  if (kind == "rectangle")
    return Domain::rectangle(b[0][0].get<double>(), b[0][1].get<double>(),
                             b[1][0].get<double>(), b[1][1].get<double>(), T);
  throw std::invalid_argument("domain: unknown kind '" + kind + "'");
}

InitialData initial_from_config(const json& spec, const SpatialGrid& grid) {
  InitialData data;
  data.u0.assign(grid.num_nodes(), Complex{});
  data.u1.assign(grid.num_nodes(), Complex{});
  if (spec.contains("u0")) {
    const auto& u0 = spec.at("u0");
    for (int node = 0; node < grid.num_nodes(); ++node)
      data.u0[node] = Complex{u0[node][0].get<double>(),
                              u0[node].size() > 1 ? u0[node][1].get<double>()
                                                  : 0.0};
    if (spec.contains("u1")) {
      const auto& u1 = spec.at("u1");
      for (int node = 0; node < grid.num_nodes(); ++node)
        data.u1[node] = Complex{u1[node][0].get<double>(),
                                u1[node].size() > 1 ? u1[node][1].get<double>()
                                                    : 0.0};
    }
    return data;
  }
  const std::string profile = spec.value("profile", "zero");
  if (profile == "zero") return data;
  if (profile == "sin-pi") {
    for (int node = 0; node < grid.num_nodes(); ++node) {
      const Vec x = grid.coord(node);
      double v = std::sin(kPi * x.x);
      if (grid.dim() == 2) v *= std::sin(kPi * x.y);
      data.u0[node] = Complex{spec.value("amplitude", 1.0) * v, 0.0};
    }
    return data;
  }
  if (profile == "bump") {
    const double c = spec.value("center", 0.5);
    const double r = spec.value("radius", 0.2);
    const double amp = spec.value("amplitude", 1.0);
    for (int node = 0; node < grid.num_nodes(); ++node) {
      const Vec x = grid.coord(node);
      const double d = grid.dim() == 2
                           ? std::hypot(x.x - c, x.y - c)
                           : std::abs(x.x - c);
      data.u0[node] = Complex{amp * smooth_bump(d / r), 0.0};
    }
    return data;
  }
  throw std::invalid_argument("initial: unknown profile '" + profile + "'");
}

}  // namespace

CoefficientField coefficients_from_config(const json& spec,
                                          const SpatialGrid& grid) {
  const std::string family = spec.value("family", "identity");
  if (family == "identity") return CoefficientField::identity(grid);
  if (family == "scalar-sin")
    return CoefficientField::scalar_sin(grid, spec.value("c0", 1.0),
                                        spec.value("c1", 0.5),
                                        vec_from(spec.value("k", json{1.0})));
  if (family == "diagonal")
    return CoefficientField::diagonal(grid, spec.value("d1", 1.0),
                                      spec.value("d2", 1.0));
  if (family == "rotated-diagonal")
    return CoefficientField::rotated_diagonal(
        grid, spec.value("theta", 0.0), spec.value("l10", 1.0),
        spec.value("l11", 0.0), spec.value("l20", 1.0), spec.value("l21", 0.0));
  if (family == "nodal") {
    std::vector<SymMat> entries;
    entries.reserve(grid.num_nodes());
    for (const auto& row : spec.at("entries")) {
      SymMat m;
      m.dim = grid.dim();
      m.a11 = row[0].get<double>();
      if (row.size() > 1) m.a12 = row[1].get<double>();
      if (row.size() > 2) m.a22 = row[2].get<double>();
      entries.push_back(m);
    }
    return CoefficientField::from_nodal(grid, std::move(entries));
  }
  throw std::invalid_argument("coefficients: unknown family '" + family + "'");
}

Hypersurface surface_from_config(const json& spec, const SpatialGrid& grid) {
  const std::string form = spec.value("form", "constant");
  if (form == "constant")
    return Hypersurface::constant(grid, spec.value("c", 0.5));
  if (form == "affine") {
    std::optional<double> cap;
    if (spec.contains("cap")) cap = spec.at("cap").get<double>();
    const auto clamp = spec.value("clamp", false)
                           ? Hypersurface::Clamp::ToRange
                           : Hypersurface::Clamp::No;
    return Hypersurface::affine(grid, spec.value("c0", 0.0),
                                vec_from(spec.value("slope", json::array())),
                                cap, clamp);
  }
  if (form == "nodal") {
    std::vector<double> values;
    for (const auto& v : spec.at("values")) values.push_back(v.get<double>());
    return Hypersurface::from_nodal(grid, std::move(values));
  }
  throw std::invalid_argument("surface: unknown form '" + form + "'");
}

std::vector<Hypersurface> foliation_from_config(
    const json& spec, const SpatialGrid& grid,
    const std::vector<double>& taus) {
  const std::string family = spec.value("family", "horizontal");
  std::vector<Hypersurface> out;
  out.reserve(taus.size());
  if (family == "horizontal") {
    for (double tau : taus) out.push_back(Hypersurface::constant(grid, tau));
    return out;
  }
  if (family == "capped") {
    const auto base = surface_from_config(spec.at("surface"), grid);
    for (double tau : taus) {
      std::vector<double> values(grid.num_nodes());
      for (int node = 0; node < grid.num_nodes(); ++node)
        values[node] = std::min(tau, base.value(node));
      out.push_back(Hypersurface::from_nodal(grid, std::move(values)));
    }
    return out;
  }
  if (family == "scaled") {
    const auto base = surface_from_config(spec.at("surface"), grid);
    for (double tau : taus) {
      std::vector<double> values(grid.num_nodes());
      for (int node = 0; node < grid.num_nodes(); ++node)
        values[node] = tau * base.value(node);
      out.push_back(Hypersurface::from_nodal(grid, std::move(values)));
    }
    return out;
  }
  throw std::invalid_argument("foliation: unknown family '" + family + "'");
}

Scenario scenario_from_config(const json& config) {
  if (config.contains("manufactured")) {
    const auto& m = config.at("manufactured");
    const std::string name =
        m.is_string() ? m.get<std::string>() : m.at("name").get<std::string>();
    ManufacturedParams p;
    if (m.is_object() && m.contains("params")) {
      const auto& pr = m.at("params");
      p.n = pr.value("n", p.n);
      p.t_final = pr.value("t_final", p.t_final);
      p.phase = pr.value("phase", p.phase);
      p.center = pr.value("center", p.center);
      p.radius = pr.value("radius", p.radius);
      p.amplitude = pr.value("amplitude", p.amplitude);
      p.domain_lo = pr.value("domain_lo", p.domain_lo);
      p.domain_hi = pr.value("domain_hi", p.domain_hi);
    }
    Scenario s = manufactured(name, p);
    if (config.contains("cfl_safety"))
      s.cfl_safety = config.at("cfl_safety").get<double>();
    return s;
  }

  Scenario s;
  s.name = config.value("name", "custom");
  const Domain domain = domain_from_config(config.at("domain"));
  const auto& nodes = config.at("grid").at("nodes");
  s.grid = std::make_shared<SpatialGrid>(
      domain, nodes[0].get<int>(),
      nodes.size() > 1 ? nodes[1].get<int>() : 0);
  s.A = coefficients_from_config(config.value("coefficients", json::object()),
                                 *s.grid);
  s.initial =
      initial_from_config(config.value("initial", json::object()), *s.grid);

  const std::string boundary_kind =
      config.value("boundary", json::object()).value("kind", "zero");
  if (boundary_kind == "zero")
    s.boundary = zero_field();
  else
    throw std::invalid_argument("boundary: unknown kind '" + boundary_kind +
                                "' (use manufactured scenarios for analytic "
                                "data)");
  const std::string source_kind =
      config.value("source", json::object()).value("kind", "zero");
  if (source_kind != "zero")
    throw std::invalid_argument("source: unknown kind '" + source_kind + "'");

  s.cfl_safety = config.value("cfl_safety", 0.9);
  return s;
}

std::string config_hash(const json& config) {
  const std::string dump = config.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace slantwave
