#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgeguard/guards.hpp"
#include "edgeguard/structure.hpp"
#include "edgeguard/verify_oracle.hpp"

namespace edgeguard {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// Integers become JSON numbers; anything else (or integers outside the
// int64 range) becomes a "p/q" string.
Json scalar_json(const Scalar& v);
Json point_json(const Point& p);

// Inverse of scalar_json. Throws Error on malformed input.
Scalar scalar_from_json(const Json& j);

Json polygon_json(const Polygon& poly);
Json digraph_json(const VisibilityDigraph& dg);
Json weak_groups_json(const std::vector<WeakGroup>& groups);
Json bottlenecks_json(const std::vector<Bottleneck>& bs);
Json faces_json(const EdgeSetPartition& part);
Json plan_json(const GuardPlan& plan);
Json verification_json(const Polygon& poly, const VisibilityDigraph& dg,
                       const std::vector<std::size_t>& guards);
Json findings_json(const std::vector<ConjectureFinding>& findings);
Json oracle_json(const std::optional<GuardSet>& result, std::size_t limit);

// Full report documents, one per command.
Json analysis_report(const Analysis& a);
Json guards_report(const Analysis& a, const GuardPlan& plan);
Json verify_report(const Polygon& poly, const VisibilityDigraph& dg,
                   const std::vector<std::size_t>& guards);
Json oracle_report(const Polygon& poly, const std::optional<GuardSet>& result,
                   std::size_t limit);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace edgeguard
