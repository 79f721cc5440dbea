#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace edgeguard {

// Exact rational coordinate. Every predicate in the library is decided
// without rounding.
using Scalar = mpq_class;

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

std::string to_string(const Point& p);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Scalar& s, const Point& p);

Scalar cross(const Point& u, const Point& v);
Scalar dot(const Point& u, const Point& v);
Scalar squared_length(const Point& u);

// a + t (b - a)
Point lerp(const Point& a, const Point& b, const Scalar& t);

// Sign of (q - p) x (r - p): +1 left turn, 0 collinear, -1 right turn.
int orient(const Point& p, const Point& q, const Point& r);

struct Segment {
  Point a;
  Point b;
};

enum class SegmentTag { Disjoint, ProperCross, Touch, Overlap };

const char* to_string(SegmentTag tag);

struct SegmentRelation {
  SegmentTag tag = SegmentTag::Disjoint;
  // ProperCross / Touch: the single common point. Overlap: both ends of the
  // shared sub-segment.
  std::vector<Point> witness;
};

// Throws DegenerateSegment when either segment has coincident endpoints.
SegmentRelation segment_relation(const Segment& s1, const Segment& s2);

// True iff p lies on the closed segment ab (a != b).
bool on_segment(const Point& a, const Point& b, const Point& p);

// Squared distance from p to the closed segment ab and the nearest point.
struct SegmentProjection {
  Point foot;
  Scalar t;
  Scalar dist2;
};
SegmentProjection project_to_segment(const Point& a, const Point& b,
                                     const Point& p);

// Simple, counterclockwise polygon with no repeated vertices and no
// consecutive collinear triples. Edge i joins vertex i to vertex i+1 (mod n)
// and is parameterized by t in [0,1] from its source vertex. Instances are
// immutable and can only be obtained through validate().
class Polygon {
 public:
  // Checks all invariants; clockwise input is reversed to counterclockwise
  // keeping vertex 0 in place. Throws ValidationError naming raw indices.
  static Polygon validate(std::vector<Point> raw_vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }

  std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

  const Point& source(std::size_t edge) const { return vertices_[edge]; }
  const Point& target(std::size_t edge) const { return vertices_[next(edge)]; }
  Segment edge(std::size_t e) const { return {source(e), target(e)}; }
  Point point_on_edge(std::size_t e, const Scalar& t) const;

  bool is_reflex(std::size_t v) const { return reflex_[v] != 0; }

  // Twice the signed area; positive for every validated polygon.
  Scalar doubled_area() const;

  // Throws InvalidEdgeId.
  void check_edge(std::size_t e) const;

  // True iff the input had to be reversed to become counterclockwise.
  bool was_reversed() const { return reversed_; }

 private:
  Polygon(std::vector<Point> vertices, bool reversed);

  std::vector<Point> vertices_;
  std::vector<char> reflex_;
  bool reversed_ = false;
};

Scalar doubled_signed_area(std::span<const Point> pts);

struct Location {
  enum class Kind { Interior, Boundary, Exterior };
  Kind kind = Kind::Exterior;
  // Boundary only. Vertex hits report the edge whose source is the vertex.
  std::size_t edge = 0;
  Scalar t;
};

Location locate_point(const Polygon& poly, const Point& p);

// True iff no point of the closed segment pq lies in the exterior. Grazing
// the boundary (through a reflex vertex, along an edge) does not block.
// Throws PointOutsidePolygon if p or q is exterior.
bool sees(const Polygon& poly, const Point& p, const Point& q);

// Same predicate without the exterior check on p and q. Callers must
// guarantee both are non-exterior.
bool sees_unchecked(const Polygon& poly, const Point& p, const Point& q);

// True iff direction d, leaving vertex v, starts into the closed interior
// cone of the polygon at v.
bool direction_in_cone(const Polygon& poly, std::size_t v, const Point& d);

std::vector<std::size_t> reflex_vertices(const Polygon& poly);

}  // namespace edgeguard
