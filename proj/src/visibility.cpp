#include "edgeguard/visibility.hpp"

#include <algorithm>

#include "edgeguard/error.hpp"

namespace edgeguard {

std::vector<Scalar> critical_parameters(const Polygon& poly, std::size_t e) {
  poly.check_edge(e);
  const Point& a = poly.source(e);
  const Point ab = poly.target(e) - a;
  const std::size_t n = poly.size();

  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  Point w;
  Scalar den;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& vi = poly.vertex(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      w = poly.vertex(j) - vi;
      den = cross(ab, w);
      if (sgn(den) == 0) continue;
      Scalar t = cross(vi - a, w) / den;
      if (sgn(t) > 0 && t < 1) ts.push_back(std::move(t));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

VisibilityEngine::VisibilityEngine(const Polygon& poly)
    : poly_(poly), critical_(poly.size()), samples_(poly.size()) {
  for (std::size_t e = 0; e < poly.size(); ++e) {
    critical_[e] = edgeguard::critical_parameters(poly, e);
  }
}

const std::vector<Scalar>& VisibilityEngine::critical_parameters(
    std::size_t e) const {
  poly_.check_edge(e);
  return critical_[e];
}

VisibilityEngine::Samples VisibilityEngine::make_samples(
    const Polygon& poly, std::size_t e, std::vector<Scalar> critical) {
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

  Samples s;
  const std::size_t k = critical.size();
  s.params.reserve(2 * k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) s.params.push_back((critical[i - 1] + critical[i]) / 2);
    s.params.push_back(critical[i]);
  }
  s.points.reserve(s.params.size());
  for (const auto& t : s.params) s.points.push_back(poly.point_on_edge(e, t));

  // Endpoints first, then gap midpoints (occlusion usually spans whole
  // gaps), then the interior critical parameters.
  const std::size_t m = s.params.size();
  s.probe_order.push_back(0);
  if (m > 1) s.probe_order.push_back(m - 1);
  for (std::size_t i = 1; i < m; i += 2) s.probe_order.push_back(i);
  for (std::size_t i = 2; i + 1 < m; i += 2) s.probe_order.push_back(i);
  return s;
}

const VisibilityEngine::Samples& VisibilityEngine::samples(std::size_t e) const {
  poly_.check_edge(e);
  if (!samples_[e]) samples_[e] = make_samples(poly_, e, critical_[e]);
  return *samples_[e];
}

bool VisibilityEngine::point_sees_edge(const Point& q, std::size_t g,
                                       std::optional<Point>* hint) const {
  poly_.check_edge(g);
  const Point& a = poly_.source(g);
  const Point& b = poly_.target(g);
  auto accept = [&](const Point& p) {
    if (!sees_unchecked(poly_, p, q)) return false;
    if (hint) *hint = p;
    return true;
  };
  if (hint && hint->has_value() && accept(**hint)) return true;
  if (accept(a) || accept(b)) return true;

  const Point ab = b - a;
  const Point aq = a - q;
  Point w;
  Scalar den;
  Scalar s;
  for (const Point& v : poly_.vertices()) {
    if (v == q) continue;
    w = v - q;
    den = cross(ab, w);
    if (sgn(den) == 0) continue;
    s = -cross(aq, w) / den;
    if (sgn(s) <= 0 || s >= 1) continue;
    if (accept(lerp(a, b, s))) return true;
  }
  return false;
}

IntervalSet VisibilityEngine::assemble(std::size_t g, const Samples& s) const {
  const std::size_t m = s.params.size();
  std::vector<char> visible(m, 0);
  std::optional<Point> hint;
  for (std::size_t i = 0; i < m; ++i) {
    visible[i] = point_sees_edge(s.points[i], g, &hint);
  }
  IntervalSet out;
  for (std::size_t i = 0; i < m; ++i) {
    if (!visible[i]) continue;
    if (i % 2 == 1) {
      out.add(s.params[i - 1], s.params[i + 1]);
    } else {
      out.add(s.params[i], s.params[i]);
    }
  }
  return out;
}

IntervalSet VisibilityEngine::visible_portion(std::size_t g, std::size_t e) const {
  poly_.check_edge(g);
  return assemble(g, samples(e));
}

IntervalSet VisibilityEngine::visible_portion_refined(
    std::size_t g, std::size_t e, const std::vector<Scalar>& extra) const {
  poly_.check_edge(g);
  poly_.check_edge(e);
  std::vector<Scalar> params = critical_[e];
  for (const auto& t : extra) {
    if (sgn(t) >= 0 && t <= 1) params.push_back(t);
  }
  return assemble(g, make_samples(poly_, e, std::move(params)));
}

bool VisibilityEngine::fully_sees(std::size_t g, std::size_t e) const {
  poly_.check_edge(g);
  const Samples& s = samples(e);
  std::optional<Point> hint;
  for (std::size_t i : s.probe_order) {
    if (!point_sees_edge(s.points[i], g, &hint)) return false;
  }
  return true;
}

bool point_sees_edge(const Polygon& poly, const Point& q, std::size_t g) {
  if (locate_point(poly, q).kind == Location::Kind::Exterior) {
    throw PointOutsidePolygon("PointOutsidePolygon: " + to_string(q));
  }
  return VisibilityEngine(poly).point_sees_edge(q, g);
}

bool point_sees_whole_edge(const Polygon& poly, const Point& q, std::size_t e) {
  poly.check_edge(e);
  if (locate_point(poly, q).kind == Location::Kind::Exterior) {
    throw PointOutsidePolygon("PointOutsidePolygon: " + to_string(q));
  }
  // Seen status along e can only flip where e meets a line through q and a
  // vertex.
  const Point& a = poly.source(e);
  const Point ab = poly.target(e) - a;
  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  for (const Point& v : poly.vertices()) {
    if (v == q) continue;
    const Point w = v - q;
    const Scalar den = cross(ab, w);
    if (sgn(den) == 0) continue;
    Scalar t = cross(q - a, w) / den;
    if (sgn(t) > 0 && t < 1) ts.push_back(std::move(t));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!sees_unchecked(poly, q, poly.point_on_edge(e, ts[i]))) return false;
    if (i + 1 < ts.size()) {
      Scalar mid = (ts[i] + ts[i + 1]) / 2;
      if (!sees_unchecked(poly, q, poly.point_on_edge(e, mid))) return false;
    }
  }
  return true;
}

IntervalSet visible_portion(const Polygon& poly, std::size_t g, std::size_t e) {
  return VisibilityEngine(poly).visible_portion(g, e);
}

bool fully_sees(const Polygon& poly, std::size_t g, std::size_t e) {
  return VisibilityEngine(poly).fully_sees(g, e);
}

std::size_t VisibilityDigraph::in_degree(std::size_t e) const {
  std::size_t d = 0;
  for (std::size_t g = 0; g < n_; ++g) d += g != e && sees(g, e);
  return d;
}

std::size_t VisibilityDigraph::out_degree(std::size_t g) const {
  std::size_t d = 0;
  for (std::size_t e = 0; e < n_; ++e) d += g != e && sees(g, e);
  return d;
}

std::vector<std::size_t> VisibilityDigraph::in_degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t e = 0; e < n_; ++e) out[e] = in_degree(e);
  return out;
}

std::string VisibilityDigraph::bit_string() const {
  std::string s(n_ * n_, '0');
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    if (adj_[i]) s[i] = '1';
  }
  return s;
}

VisibilityDigraph build_digraph(const Polygon& poly) {
  const std::size_t n = poly.size();
  VisibilityEngine engine(poly);
  VisibilityDigraph dg(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t e = 0; e < n; ++e) {
      dg.set(g, e, engine.fully_sees(g, e));
    }
  }
  return dg;
}

}  // namespace edgeguard
