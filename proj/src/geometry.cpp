#include "edgeguard/geometry.hpp"

#include <algorithm>
#include <utility>

#include "edgeguard/error.hpp"

namespace edgeguard {

std::string to_string(const Point& p) {
  return "(" + p.x.get_str() + ", " + p.y.get_str() + ")";
}

Point operator+(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y};
}
Point operator-(const Point& a, const Point& b) {
  return {a.x - b.x, a.y - b.y};
}
Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }

Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
Scalar squared_length(const Point& u) { return dot(u, u); }

Point lerp(const Point& a, const Point& b, const Scalar& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

int orient(const Point& p, const Point& q, const Point& r) {
  Scalar lhs = (q.x - p.x) * (r.y - p.y);
  Scalar rhs = (q.y - p.y) * (r.x - p.x);
  int c = cmp(lhs, rhs);
  return (c > 0) - (c < 0);
}

const char* to_string(SegmentTag tag) {
  switch (tag) {
    case SegmentTag::Disjoint:
      return "Disjoint";
    case SegmentTag::ProperCross:
      return "ProperCross";
    case SegmentTag::Touch:
      return "Touch";
    case SegmentTag::Overlap:
      return "Overlap";
  }
  return "?";
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

namespace {

// Parameter of p along ab, assuming p is on the supporting line.
Scalar line_parameter(const Point& a, const Point& b, const Point& p) {
  if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
  return (p.y - a.y) / (b.y - a.y);
}

}  // namespace

SegmentRelation segment_relation(const Segment& s1, const Segment& s2) {
  if (s1.a == s1.b || s2.a == s2.b) throw DegenerateSegment();
  const Point& a = s1.a;
  const Point& b = s1.b;
  const Point& c = s2.a;
  const Point& d = s2.b;
  int o1 = orient(a, b, c);
  int o2 = orient(a, b, d);
  int o3 = orient(c, d, a);
  int o4 = orient(c, d, b);

  SegmentRelation rel;
  if (o1 == 0 && o2 == 0) {
    // Collinear: intersect parameter ranges along s1.
    Scalar tc = line_parameter(a, b, c);
    Scalar td = line_parameter(a, b, d);
    if (tc > td) std::swap(tc, td);
    Scalar lo = std::max(tc, Scalar(0));
    Scalar hi = std::min(td, Scalar(1));
    if (lo > hi) return rel;
    if (lo == hi) {
      rel.tag = SegmentTag::Touch;
      rel.witness.push_back(lerp(a, b, lo));
    } else {
      rel.tag = SegmentTag::Overlap;
      rel.witness.push_back(lerp(a, b, lo));
      rel.witness.push_back(lerp(a, b, hi));
    }
    return rel;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    rel.tag = SegmentTag::ProperCross;
    Point ab = b - a;
    Scalar t = cross(c - a, d - c) / cross(ab, d - c);
    rel.witness.push_back(lerp(a, b, t));
    return rel;
  }
  auto touch = [&rel](const Point& p) {
    rel.tag = SegmentTag::Touch;
    rel.witness.push_back(p);
    return rel;
  };
  if (o1 == 0 && on_segment(a, b, c)) return touch(c);
  if (o2 == 0 && on_segment(a, b, d)) return touch(d);
  if (o3 == 0 && on_segment(c, d, a)) return touch(a);
  if (o4 == 0 && on_segment(c, d, b)) return touch(b);
  return rel;
}

SegmentProjection project_to_segment(const Point& a, const Point& b,
                                     const Point& p) {
  Point ab = b - a;
  Scalar t = dot(p - a, ab) / squared_length(ab);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  Point foot = lerp(a, b, t);
  Scalar d2 = squared_length(p - foot);
  return {std::move(foot), std::move(t), std::move(d2)};
}

Scalar doubled_signed_area(std::span<const Point> pts) {
  Scalar area = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& u = pts[i];
    const Point& v = pts[(i + 1) % pts.size()];
    area += u.x * v.y - v.x * u.y;
  }
  return area;
}

Polygon::Polygon(std::vector<Point> vertices, bool reversed)
    : vertices_(std::move(vertices)), reversed_(reversed) {
  const std::size_t n = vertices_.size();
  reflex_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    reflex_[i] = orient(vertices_[prev(i)], vertices_[i], vertices_[next(i)]) < 0;
  }
}

Polygon Polygon::validate(std::vector<Point> raw) {
  const std::size_t n = raw.size();
  if (n < 3) throw ValidationError(ValidationKind::TooFewVertices, {});

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&raw](std::size_t i, std::size_t j) { return raw[i] < raw[j]; });
  for (std::size_t k = 1; k < n; ++k) {
    if (raw[order[k - 1]] == raw[order[k]]) {
      std::size_t i = std::min(order[k - 1], order[k]);
      std::size_t j = std::max(order[k - 1], order[k]);
      throw ValidationError(ValidationKind::RepeatedVertex, {i, j});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (orient(raw[(i + n - 1) % n], raw[i], raw[(i + 1) % n]) == 0) {
      throw ValidationError(ValidationKind::ConsecutiveCollinear, {i});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Segment ei{raw[i], raw[(i + 1) % n]};
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through vertex 0
      Segment ej{raw[j], raw[(j + 1) % n]};
      if (segment_relation(ei, ej).tag != SegmentTag::Disjoint) {
        throw ValidationError(ValidationKind::NotSimple, {i, j});
      }
    }
  }

  bool reversed = false;
  if (doubled_signed_area(raw) < 0) {
    std::reverse(raw.begin() + 1, raw.end());
    reversed = true;
  }
  return Polygon(std::move(raw), reversed);
}

Point Polygon::point_on_edge(std::size_t e, const Scalar& t) const {
  return lerp(source(e), target(e), t);
}

Scalar Polygon::doubled_area() const { return doubled_signed_area(vertices_); }

void Polygon::check_edge(std::size_t e) const {
  if (e >= size()) throw InvalidEdgeId(e, size());
}

Location locate_point(const Polygon& poly, const Point& p) {
  const std::size_t n = poly.size();
  Location loc;
  for (std::size_t i = 0; i < n; ++i) {
    if (poly.vertex(i) == p) {
      loc.kind = Location::Kind::Boundary;
      loc.edge = i;
      loc.t = 0;
      return loc;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.source(i);
    const Point& b = poly.target(i);
    if (on_segment(a, b, p)) {
      loc.kind = Location::Kind::Boundary;
      loc.edge = i;
      loc.t = line_parameter(a, b, p);
      return loc;
    }
  }
  // Crossing number with a rightward ray, half-open in y.
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.source(i);
    const Point& b = poly.target(i);
    if (a.y <= p.y && p.y < b.y) {
      if (orient(a, b, p) > 0) inside = !inside;
    } else if (b.y <= p.y && p.y < a.y) {
      if (orient(a, b, p) < 0) inside = !inside;
    }
  }
  loc.kind = inside ? Location::Kind::Interior : Location::Kind::Exterior;
  return loc;
}

bool direction_in_cone(const Polygon& poly, std::size_t v, const Point& d) {
  const Point& at = poly.vertex(v);
  Point to_next = poly.vertex(poly.next(v)) - at;
  Point to_prev = poly.vertex(poly.prev(v)) - at;
  if (!poly.is_reflex(v)) {
    return sgn(cross(to_next, d)) >= 0 && sgn(cross(to_prev, d)) <= 0;
  }
  // Reflex: reject only directions strictly inside the (convex) exterior
  // wedge running counterclockwise from to_prev to to_next.
  return !(sgn(cross(to_prev, d)) > 0 && sgn(cross(to_next, d)) < 0);
}

bool sees_unchecked(const Polygon& poly, const Point& p, const Point& q) {
  if (p == q) return true;
  const std::size_t n = poly.size();
  const Point d = q - p;

  // side[i] = orient(p, q, v_i)
  std::vector<signed char> side(n);
  Scalar lhs;
  Scalar rhs;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& v = poly.vertex(i);
    lhs = d.x * (v.y - p.y);
    rhs = d.y * (v.x - p.x);
    int c = cmp(lhs, rhs);
    side[i] = static_cast<signed char>((c > 0) - (c < 0));
  }

  // The segment's boundary contacts are p, q, vertices on pq and transversal
  // edge crossings. Between consecutive contacts the segment is entirely
  // interior or entirely exterior, which a local test at a contact decides.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = poly.next(i);
    if (side[i] * side[j] >= 0) continue;
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(j);
    int sp = orient(a, b, p);
    int sq = orient(a, b, q);
    if (sp * sq < 0) return false;  // proper crossing
    // p (or q) lies inside edge ab; the segment must leave toward the
    // interior side, which is the left of ab.
    if (sp == 0 && sq < 0) return false;
    if (sq == 0 && sp < 0) return false;
  }

  const Point back = p - q;
  for (std::size_t i = 0; i < n; ++i) {
    if (side[i] != 0) continue;
    const Point& v = poly.vertex(i);
    if (sgn(dot(v - p, d)) < 0 || sgn(dot(q - v, d)) < 0) continue;
    if (!(v == q) && !direction_in_cone(poly, i, d)) return false;
    if (!(v == p) && !direction_in_cone(poly, i, back)) return false;
  }
  return true;
}

bool sees(const Polygon& poly, const Point& p, const Point& q) {
  if (locate_point(poly, p).kind == Location::Kind::Exterior) {
    throw PointOutsidePolygon("PointOutsidePolygon: " + to_string(p));
  }
  if (locate_point(poly, q).kind == Location::Kind::Exterior) {
    throw PointOutsidePolygon("PointOutsidePolygon: " + to_string(q));
  }
  return sees_unchecked(poly, p, q);
}

std::vector<std::size_t> reflex_vertices(const Polygon& poly) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly.is_reflex(i)) out.push_back(i);
  }
  return out;
}

}  // namespace edgeguard
