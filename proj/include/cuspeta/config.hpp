#pragma once

#include "cuspeta/cusps.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace cuspeta {

/// Parses a manifold configuration document. Schema:
///
/// {
///   "n": 2,
///   "bundle": {"kind": "dolbeault" | "signature" | "spinor" | "custom",
///              "twist": "p/q",            // spinor, custom
///              "weight": ["p/q", ...],    // custom
///              "dim": "d"},               // custom, optional
///   "bulk": {"kind": "volume_ratio", "v": "p/q"} |
///           {"kind": "integral", "value": "p/q"},
///   "cusps": [{"d": [1, 2]}, ...],
///   "h_diff": "p/q"                       // optional
/// }
///
/// Rationals are "p/q" strings (denominator omitted when 1); for spinor
/// bundles in odd dimension the bulk may be omitted (the index density
/// vanishes). Violations raise std::invalid_argument naming the rule.
ManifoldDescription parseManifoldConfig(const nlohmann::json &doc);
ManifoldDescription loadManifoldConfig(const std::string &path);

nlohmann::json toJson(const ManifoldDescription &m);
nlohmann::json toJson(const CorrectionReport &report);

} // namespace cuspeta
