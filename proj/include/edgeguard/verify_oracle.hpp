#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edgeguard/interval_set.hpp"
#include "edgeguard/structure.hpp"
#include "edgeguard/visibility.hpp"

namespace edgeguard {

// Edges not fully seen by any guard (a guard always covers itself).
std::vector<std::size_t> verify_edge_coverage(const VisibilityDigraph& dg,
                                              const std::vector<std::size_t>& guards);

struct EdgeCoverage {
  std::vector<std::size_t> whole_edge_guards;  // guards that fully see the edge
  IntervalSet seen;                            // union over all guards
};

struct CoverageReport {
  std::vector<EdgeCoverage> edges;
  std::vector<std::pair<std::size_t, IntervalSet>> uncovered;
  bool boundary_fully_covered = false;
};

// Point-level check: each edge must be covered by the union of the parts
// the guards see, whole-edge visibility not required.
CoverageReport verify_boundary_pointwise(const Polygon& poly,
                                         const std::vector<std::size_t>& guards);

// Largest edge count min_guard_set accepts.
inline constexpr std::size_t kMaxOracleEdges = 256;

struct GuardSet {
  std::size_t size = 0;
  std::vector<std::size_t> guards;  // ascending
};

// Minimum set cover over the digraph rows, at most `limit` guards. The
// witness is the lexicographically least optimal set. nullopt if no cover
// fits in `limit`. Throws Error for more than kMaxOracleEdges edges.
std::optional<GuardSet> min_guard_set(const VisibilityDigraph& dg, std::size_t limit);

struct SampleDiscrepancy {
  // "outside": q sampled visible but outside visible_portion.
  // "midpoint": midpoint of a computed interval not confirmed visible.
  std::string kind;
  Scalar t;
  Point q;
};

struct SampleReport {
  std::size_t samples_visible = 0;
  std::vector<SampleDiscrepancy> discrepancies;
  bool agrees() const { return discrepancies.empty(); }
};

// Cross-checks visible_portion(g, e) against k x k sample pairs (p on g,
// q on e) decided by the point predicate sees() alone.
SampleReport sampled_visibility_check(const Polygon& poly, std::size_t g,
                                      std::size_t e, std::size_t k);

enum class FindingKind {
  InDegreeBelow3,
  NonWeakBelow4,
  WeakRunBadLength,
  ChordCrossing,
  Observation3Violation,
  BoundExceeded,
};

const char* to_string(FindingKind kind);

struct ConjectureFinding {
  FindingKind kind;
  std::vector<Point> polygon;
  std::string detail;
};

// In-degree floors for the polygon size: every edge, and non-weak edges.
std::size_t in_degree_floor(std::size_t n);
std::size_t non_weak_floor(std::size_t n);

// For each edge of each face, counts the other edges that fully see it and
// lie in the face or on one of its bounding bottlenecks (the two edges at
// the chord vertex and the dominated edges). Reports counts under
// in_degree_floor(N).
std::vector<ConjectureFinding> check_observation3(const Analysis& a);

struct GuardPlan;

// Digraph floors, weak-run shapes, chord crossings and the local in-degree
// check. Everything except the guard bound.
std::vector<ConjectureFinding> run_structure_monitors(const Analysis& a);
std::vector<ConjectureFinding> run_monitors(const Analysis& a, const GuardPlan& plan);
std::vector<ConjectureFinding> run_monitors(const Polygon& poly);

}  // namespace edgeguard
