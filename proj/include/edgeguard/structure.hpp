#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edgeguard/geometry.hpp"
#include "edgeguard/visibility.hpp"

namespace edgeguard {

// An edge is weak when exactly three other edges fully see it. Polygons with
// fewer than 5 edges have no weak edges (in a quadrilateral, in-degree 3
// means every other edge sees it).
bool is_weak(const VisibilityDigraph& dg, std::size_t e);

enum class WeakKind { Pair, Arrowhead, Other };

const char* to_string(WeakKind kind);

struct WeakGroup {
  std::vector<std::size_t> edges;  // in boundary order, may wrap past N-1
  WeakKind kind = WeakKind::Other;
};

// Maximal circular runs of weak edges, ordered by their first edge id.
std::vector<WeakGroup> weak_edge_groups(const VisibilityDigraph& dg);

struct DominatingVertex {
  std::size_t vertex = 0;
  Point foot;
  Scalar t;
  Scalar dist2;
};

// Among vertices strictly on the inner side of e's supporting line that see
// every point of e, the one nearest to the closed segment e. Ties prefer
// reflex vertices, then the lowest id. The foot is the nearest point of e.
//
// The visibility condition matters: the nearest inward vertex can sit
// behind a wall whose endpoints are both farther away (a thin spike ending
// in e, say), and then it does not see e at all.
std::optional<DominatingVertex> closest_dominating_vertex(const Polygon& poly,
                                                          std::size_t e);

// Same ordering without the visibility condition.
std::optional<DominatingVertex> nearest_inward_vertex(const Polygon& poly,
                                                      std::size_t e);

enum class BottleneckKind { Shallow, Normal };

const char* to_string(BottleneckKind kind);

struct Bottleneck {
  std::size_t edge = 0;    // dominated edge
  std::size_t vertex = 0;  // reflex dominating vertex
  Point foot;
  Scalar t;
  Scalar dist2;
  BottleneckKind kind = BottleneckKind::Normal;

  Segment chord(const Polygon& poly) const { return {poly.vertex(vertex), foot}; }
};

// One bottleneck per edge whose closest dominating vertex is reflex, in edge
// order. Shallow when the vertex belongs to an edge adjacent to the
// dominated edge. Throws DominanceViolated if the vertex fails to see the
// whole edge.
std::vector<Bottleneck> find_bottlenecks(const Polygon& poly);

std::vector<Bottleneck> normal_only(const std::vector<Bottleneck>& all);

struct CrossingReport {
  std::size_t first = 0;  // indices into the bottleneck list
  std::size_t second = 0;
  Point at;
};

// nullopt when no two chords cross properly.
std::optional<CrossingReport> assert_noncrossing(const Polygon& poly,
                                                 const std::vector<Bottleneck>& bs);

struct Face {
  std::vector<std::size_t> edges;   // ascending
  std::vector<std::size_t> chords;  // indices into EdgeSetPartition::chords
};

struct Chord {
  std::size_t vertex = 0;
  Point foot;
  Scalar from;  // boundary positions, from < to; position of edge i at t is i + t
  Scalar to;
  std::size_t inner_face = 0;  // face on the arc (from, to)
  std::size_t outer_face = 0;
  std::vector<std::size_t> dominated;  // edges of the bottlenecks using it
};

struct EdgeSetPartition {
  std::vector<Face> faces;  // ordered by where each face first meets the boundary
  std::vector<Chord> chords;
  // For each input bottleneck, the index of its chord (equal chords merge).
  std::vector<std::size_t> chord_of;
};

// Splits the boundary cycle along the normal-bottleneck chords. A dominated
// edge whose foot lies strictly inside it belongs to both adjacent faces.
// Throws CrossingChords when two chords interleave.
EdgeSetPartition partition_edge_sets(const Polygon& poly,
                                     const std::vector<Bottleneck>& normals);

// Everything derived from a polygon before guards are placed.
struct Analysis {
  Polygon poly;
  VisibilityDigraph dg;
  std::vector<WeakGroup> groups;
  std::vector<Bottleneck> bottlenecks;
  std::optional<CrossingReport> crossing;  // over all bottlenecks
  bool normals_cross = false;
  // Built from the normal bottlenecks; a single face when two of their
  // chords cross.
  EdgeSetPartition partition;
};

Analysis analyze(const Polygon& poly);

}  // namespace edgeguard
