#include "edgeguard/structure.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "edgeguard/error.hpp"

namespace edgeguard {

bool is_weak(const VisibilityDigraph& dg, std::size_t e) {
  return dg.size() >= 5 && dg.in_degree(e) == 3;
}

const char* to_string(WeakKind kind) {
  switch (kind) {
    case WeakKind::Pair:
      return "pair";
    case WeakKind::Arrowhead:
      return "arrowhead";
    case WeakKind::Other:
      return "other";
  }
  return "?";
}

const char* to_string(BottleneckKind kind) {
  return kind == BottleneckKind::Shallow ? "shallow" : "normal";
}

namespace {

WeakKind classify(std::size_t len) {
  if (len == 2) return WeakKind::Pair;
  if (len == 4) return WeakKind::Arrowhead;
  return WeakKind::Other;
}

}  // namespace

std::vector<WeakGroup> weak_edge_groups(const VisibilityDigraph& dg) {
  const std::size_t n = dg.size();
  std::vector<char> weak(n);
  for (std::size_t e = 0; e < n; ++e) weak[e] = is_weak(dg, e);

  std::vector<WeakGroup> out;
  if (n == 0) return out;
  if (std::all_of(weak.begin(), weak.end(), [](char w) { return w != 0; })) {
    WeakGroup g;
    for (std::size_t e = 0; e < n; ++e) g.edges.push_back(e);
    g.kind = classify(n);
    out.push_back(std::move(g));
    return out;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (!weak[s] || weak[(s + n - 1) % n]) continue;
    WeakGroup g;
    for (std::size_t e = s; weak[e]; e = (e + 1) % n) g.edges.push_back(e);
    g.kind = classify(g.edges.size());
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<DominatingVertex> nearest_inward_vertex(const Polygon& poly,
                                                      std::size_t e) {
  poly.check_edge(e);
  const Point& a = poly.source(e);
  const Point& b = poly.target(e);
  std::optional<DominatingVertex> best;
  for (std::size_t v = 0; v < poly.size(); ++v) {
    if (v == e || v == poly.next(e)) continue;
    if (orient(a, b, poly.vertex(v)) <= 0) continue;
    SegmentProjection pr = project_to_segment(a, b, poly.vertex(v));
    bool better = !best || pr.dist2 < best->dist2 ||
                  (pr.dist2 == best->dist2 && poly.is_reflex(v) &&
                   !poly.is_reflex(best->vertex));
    if (better) {
      best = DominatingVertex{v, std::move(pr.foot), std::move(pr.t),
                              std::move(pr.dist2)};
    }
  }
  return best;
}

std::optional<DominatingVertex> closest_dominating_vertex(const Polygon& poly,
                                                          std::size_t e) {
  poly.check_edge(e);
  const Point& a = poly.source(e);
  const Point& b = poly.target(e);
  std::vector<DominatingVertex> cands;
  for (std::size_t v = 0; v < poly.size(); ++v) {
    if (v == e || v == poly.next(e)) continue;
    if (orient(a, b, poly.vertex(v)) <= 0) continue;
    SegmentProjection pr = project_to_segment(a, b, poly.vertex(v));
    cands.push_back({v, std::move(pr.foot), std::move(pr.t), std::move(pr.dist2)});
  }
  std::sort(cands.begin(), cands.end(),
            [&poly](const DominatingVertex& x, const DominatingVertex& y) {
              if (x.dist2 != y.dist2) return x.dist2 < y.dist2;
              if (poly.is_reflex(x.vertex) != poly.is_reflex(y.vertex)) {
                return poly.is_reflex(x.vertex);
              }
              return x.vertex < y.vertex;
            });
  for (auto& c : cands) {
    if (point_sees_whole_edge(poly, poly.vertex(c.vertex), e)) return std::move(c);
  }
  return std::nullopt;
}

std::vector<Bottleneck> find_bottlenecks(const Polygon& poly) {
  std::vector<Bottleneck> out;
  for (std::size_t e = 0; e < poly.size(); ++e) {
    auto dv = closest_dominating_vertex(poly, e);
    if (!dv || !poly.is_reflex(dv->vertex)) continue;
    if (!point_sees_whole_edge(poly, poly.vertex(dv->vertex), e)) {
      throw DominanceViolated(e, dv->vertex);
    }
    Bottleneck b;
    b.edge = e;
    b.vertex = dv->vertex;
    b.foot = std::move(dv->foot);
    b.t = std::move(dv->t);
    b.dist2 = std::move(dv->dist2);
    const bool adjacent =
        b.vertex == poly.prev(e) || b.vertex == poly.next(poly.next(e));
    b.kind = adjacent ? BottleneckKind::Shallow : BottleneckKind::Normal;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Bottleneck> normal_only(const std::vector<Bottleneck>& all) {
  std::vector<Bottleneck> out;
  for (const auto& b : all) {
    if (b.kind == BottleneckKind::Normal) out.push_back(b);
  }
  return out;
}

std::optional<CrossingReport> assert_noncrossing(const Polygon& poly,
                                                 const std::vector<Bottleneck>& bs) {
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const Segment si = bs[i].chord(poly);
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      SegmentRelation rel = segment_relation(si, bs[j].chord(poly));
      if (rel.tag == SegmentTag::ProperCross) {
        return CrossingReport{i, j, rel.witness.front()};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Piece {
  Scalar lo;
  Scalar hi;
};

// [lo, hi] minus the open arcs of `holes` (sorted, disjoint, inside [lo, hi]).
std::vector<Piece> carve(const Scalar& lo, const Scalar& hi,
                         const std::vector<const Chord*>& holes) {
  std::vector<Piece> out;
  Scalar cursor = lo;
  for (const Chord* h : holes) {
    if (cursor < h->from) out.push_back({cursor, h->from});
    cursor = h->to;
  }
  if (cursor < hi) out.push_back({cursor, hi});
  return out;
}

}  // namespace

EdgeSetPartition partition_edge_sets(const Polygon& poly,
                                     const std::vector<Bottleneck>& normals) {
  const std::size_t n = poly.size();
  EdgeSetPartition part;

  std::map<std::pair<Scalar, Scalar>, std::size_t> seen;
  for (const auto& b : normals) {
    Scalar pf = b.t == 1 ? Scalar(poly.next(b.edge)) : Scalar(b.edge) + b.t;
    Scalar pv(b.vertex);
    if (pv > pf) std::swap(pv, pf);
    auto key = std::make_pair(pv, pf);
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, part.chords.size()).first;
      Chord c;
      c.vertex = b.vertex;
      c.foot = b.foot;
      c.from = std::move(pv);
      c.to = std::move(pf);
      part.chords.push_back(std::move(c));
    }
    part.chords[it->second].dominated.push_back(b.edge);
    part.chord_of.push_back(it->second);
  }

  const std::size_t m = part.chords.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Chord& c = part.chords[i];
      const Chord& d = part.chords[j];
      if (c.from < d.from && d.from < c.to && c.to < d.to) {
        throw CrossingChords(std::min(i, j), std::max(i, j));
      }
    }
  }

  // parent = tightest chord whose arc contains this one; m means the root.
  std::vector<std::size_t> parent(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Chord& c = part.chords[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const Chord& d = part.chords[j];
      if (!(d.from <= c.from && c.to <= d.to)) continue;
      if (parent[i] == m ||
          d.to - d.from < part.chords[parent[i]].to - part.chords[parent[i]].from) {
        parent[i] = j;
      }
    }
  }

  // Region r < m is the inside of chord r; region m is the root.
  std::vector<std::vector<const Chord*>> children(m + 1);
  std::vector<std::vector<std::size_t>> child_ids(m + 1);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&part](std::size_t a, std::size_t b) {
    return part.chords[a].from < part.chords[b].from;
  });
  for (std::size_t i : order) {
    children[parent[i]].push_back(&part.chords[i]);
    child_ids[parent[i]].push_back(i);
  }

  struct Region {
    std::vector<Piece> pieces;
    Scalar key;
    std::vector<std::size_t> chords;
  };
  std::vector<Region> regions(m + 1);
  for (std::size_t r = 0; r <= m; ++r) {
    Region& reg = regions[r];
    if (r < m) {
      reg.pieces = carve(part.chords[r].from, part.chords[r].to, children[r]);
      reg.key = part.chords[r].from;
      reg.chords.push_back(r);
    } else {
      reg.pieces = carve(0, n, children[r]);
      reg.key = 0;
    }
    if (!reg.pieces.empty()) reg.key = reg.pieces.front().lo;
    for (std::size_t c : child_ids[r]) reg.chords.push_back(c);
    std::sort(reg.chords.begin(), reg.chords.end());
  }

  std::vector<std::size_t> rorder(m + 1);
  for (std::size_t r = 0; r <= m; ++r) rorder[r] = r;
  std::stable_sort(rorder.begin(), rorder.end(), [&regions](std::size_t a, std::size_t b) {
    return regions[a].key < regions[b].key;
  });
  std::vector<std::size_t> face_of(m + 1);
  for (std::size_t f = 0; f <= m; ++f) face_of[rorder[f]] = f;

  for (std::size_t r : rorder) {
    Face face;
    for (std::size_t e = 0; e < n; ++e) {
      for (const Piece& p : regions[r].pieces) {
        if (std::max(p.lo, Scalar(e)) < std::min(p.hi, Scalar(e + 1))) {
          face.edges.push_back(e);
          break;
        }
      }
    }
    face.chords = regions[r].chords;
    part.faces.push_back(std::move(face));
  }
  for (std::size_t i = 0; i < m; ++i) {
    part.chords[i].inner_face = face_of[i];
    part.chords[i].outer_face = face_of[parent[i]];
  }
  return part;
}

Analysis analyze(const Polygon& poly) {
  Analysis a{poly, build_digraph(poly), {}, {}, {}, false, {}};
  a.groups = weak_edge_groups(a.dg);
  a.bottlenecks = find_bottlenecks(poly);
  a.crossing = assert_noncrossing(poly, a.bottlenecks);
  std::vector<Bottleneck> normals = normal_only(a.bottlenecks);
  a.normals_cross = assert_noncrossing(poly, normals).has_value();
  a.partition = partition_edge_sets(poly, a.normals_cross ? std::vector<Bottleneck>{}
                                                          : normals);
  return a;
}

}  // namespace edgeguard
