#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "slantwave/solver.hpp"

namespace slantwave {

using json = nlohmann::json;

/// Builds a scenario from a config object. Either
///   {"manufactured": {"name": "standing", "params": {...}}}
/// or an explicit description with "domain", "grid", "coefficients",
/// "initial" (profile or arrays) and optional "boundary"/"source" ("zero").
Scenario scenario_from_config(const json& config);

/// Hypersurface from a config object: a named analytic form with parameters
///   {"form": "constant", "c": 0.5}
///   {"form": "affine", "c0": 0.3, "slope": [0.4], "cap": 0.9, "clamp": true}
/// or an explicit nodal array {"form": "nodal", "values": [...]}.
Hypersurface surface_from_config(const json& spec, const SpatialGrid& grid);

/// Monotone surface family evaluated at the given tau values:
///   {"family": "horizontal"}                    S_tau = tau
///   {"family": "capped", "surface": {...}}      S_tau = min(tau, base(x))
///   {"family": "scaled", "surface": {...}}      S_tau = tau * base(x)
std::vector<Hypersurface> foliation_from_config(const json& spec,
                                                const SpatialGrid& grid,
                                                const std::vector<double>& taus);

/// Coefficient field from {"family": ..., params} or per-node entries
/// {"family": "nodal", "entries": [[a11, a12, a22], ...]}.
CoefficientField coefficients_from_config(const json& spec,
                                          const SpatialGrid& grid);

/// FNV-1a hash of the canonical dump, used to stamp reports.
std::string config_hash(const json& config);

}  // namespace slantwave
