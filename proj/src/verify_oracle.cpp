#include "edgeguard/verify_oracle.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "edgeguard/error.hpp"
#include "edgeguard/guards.hpp"

namespace edgeguard {

std::vector<std::size_t> verify_edge_coverage(const VisibilityDigraph& dg,
                                              const std::vector<std::size_t>& guards) {
  const std::size_t n = dg.size();
  for (std::size_t g : guards) {
    if (g >= n) throw InvalidEdgeId(g, n);
  }
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < n; ++e) {
    bool seen = false;
    for (std::size_t g : guards) seen = seen || dg.sees(g, e);
    if (!seen) out.push_back(e);
  }
  return out;
}

CoverageReport verify_boundary_pointwise(const Polygon& poly,
                                         const std::vector<std::size_t>& guards) {
  for (std::size_t g : guards) poly.check_edge(g);
  VisibilityEngine engine(poly);
  CoverageReport rep;
  rep.boundary_fully_covered = true;
  for (std::size_t e = 0; e < poly.size(); ++e) {
    EdgeCoverage ec;
    for (std::size_t g : guards) {
      IntervalSet part = engine.visible_portion(g, e);
      if (part.is_full()) ec.whole_edge_guards.push_back(g);
      ec.seen.unite(part);
    }
    if (!ec.seen.is_full()) {
      rep.boundary_fully_covered = false;
      rep.uncovered.emplace_back(e, ec.seen.complement());
    }
    rep.edges.push_back(std::move(ec));
  }
  return rep;
}

namespace {

using Mask = std::bitset<kMaxOracleEdges>;

class CoverSearch {
 public:
  explicit CoverSearch(const VisibilityDigraph& dg) : n_(dg.size()), rows_(n_) {
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t e = 0; e < n_; ++e) rows_[g][e] = dg.sees(g, e);
    }
    for (std::size_t e = 0; e < n_; ++e) all_[e] = true;
    suffix_union_.resize(n_ + 1);
    suffix_max_.assign(n_ + 1, 0);
    for (std::size_t g = n_; g-- > 0;) {
      suffix_union_[g] = suffix_union_[g + 1] | rows_[g];
      suffix_max_[g] = std::max(suffix_max_[g + 1], rows_[g].count());
    }
  }

  std::size_t greedy_size() const {
    Mask cov;
    std::size_t k = 0;
    while (cov != all_) {
      std::size_t best = 0;
      std::size_t gain = 0;
      for (std::size_t g = 0; g < n_; ++g) {
        std::size_t c = (rows_[g] & ~cov).count();
        if (c > gain) {
          gain = c;
          best = g;
        }
      }
      cov |= rows_[best];
      ++k;
    }
    return k;
  }

  std::size_t lower_bound() const {
    return (n_ + suffix_max_[0] - 1) / suffix_max_[0];
  }

  // Lexicographically least cover with at most k guards.
  bool search(std::size_t k, std::vector<std::size_t>& chosen) const {
    chosen.clear();
    return dfs(0, k, Mask{}, chosen);
  }

 private:
  bool dfs(std::size_t start, std::size_t k, const Mask& cov,
           std::vector<std::size_t>& chosen) const {
    if (cov == all_) return true;
    if (chosen.size() == k || start == n_) return false;
    if ((cov | suffix_union_[start]) != all_) return false;
    const std::size_t open = n_ - cov.count();
    if (open > (k - chosen.size()) * suffix_max_[start]) return false;
    for (std::size_t g = start; g < n_; ++g) {
      if ((rows_[g] & ~cov).none()) continue;
      chosen.push_back(g);
      if (dfs(g + 1, k, cov | rows_[g], chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<Mask> rows_;
  Mask all_;
  std::vector<Mask> suffix_union_;
  std::vector<std::size_t> suffix_max_;
};

}  // namespace

std::optional<GuardSet> min_guard_set(const VisibilityDigraph& dg, std::size_t limit) {
  const std::size_t n = dg.size();
  if (n > kMaxOracleEdges) {
    throw Error("min_guard_set supports at most " + std::to_string(kMaxOracleEdges) +
                " edges");
  }
  if (n == 0) return GuardSet{};
  CoverSearch search(dg);
  const std::size_t hi = std::min(limit, search.greedy_size());
  std::vector<std::size_t> chosen;
  for (std::size_t k = std::max<std::size_t>(1, search.lower_bound()); k <= hi; ++k) {
    if (search.search(k, chosen)) return GuardSet{chosen.size(), chosen};
  }
  return std::nullopt;
}

SampleReport sampled_visibility_check(const Polygon& poly, std::size_t g,
                                      std::size_t e, std::size_t k) {
  poly.check_edge(g);
  poly.check_edge(e);
  if (k < 2) throw Error("sampled_visibility_check needs k >= 2");
  std::vector<Point> ps;
  for (std::size_t i = 0; i < k; ++i) {
    ps.push_back(poly.point_on_edge(g, Scalar(i) / Scalar(k - 1)));
  }
  auto sampled = [&](const Point& q) {
    return std::any_of(ps.begin(), ps.end(),
                       [&](const Point& p) { return sees(poly, p, q); });
  };

  const IntervalSet portion = visible_portion(poly, g, e);
  SampleReport rep;
  for (std::size_t j = 0; j < k; ++j) {
    const Scalar t = Scalar(j) / Scalar(k - 1);
    Point q = poly.point_on_edge(e, t);
    if (!sampled(q)) continue;
    ++rep.samples_visible;
    if (!portion.contains(t)) rep.discrepancies.push_back({"outside", t, q});
  }
  for (const auto& iv : portion.parts()) {
    Scalar t = (iv.lo + iv.hi) / 2;
    Point q = poly.point_on_edge(e, t);
    if (sampled(q) || point_sees_edge(poly, q, g)) continue;
    rep.discrepancies.push_back({"midpoint", t, q});
  }
  return rep;
}

const char* to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::InDegreeBelow3:
      return "InDegreeBelow3";
    case FindingKind::NonWeakBelow4:
      return "NonWeakBelow4";
    case FindingKind::WeakRunBadLength:
      return "WeakRunBadLength";
    case FindingKind::ChordCrossing:
      return "ChordCrossing";
    case FindingKind::Observation3Violation:
      return "Observation3Violation";
    case FindingKind::BoundExceeded:
      return "BoundExceeded";
  }
  return "?";
}

std::size_t in_degree_floor(std::size_t n) { return std::min<std::size_t>(3, n - 1); }
std::size_t non_weak_floor(std::size_t n) { return std::min<std::size_t>(4, n - 1); }

std::vector<ConjectureFinding> check_observation3(const Analysis& a) {
  const std::size_t n = a.poly.size();
  const EdgeSetPartition& part = a.partition;
  std::vector<ConjectureFinding> out;
  for (std::size_t f = 0; f < part.faces.size(); ++f) {
    const Face& face = part.faces[f];
    std::set<std::size_t> allowed(face.edges.begin(), face.edges.end());
    for (std::size_t c : face.chords) {
      const Chord& ch = part.chords[c];
      allowed.insert(a.poly.prev(ch.vertex));
      allowed.insert(ch.vertex);
      allowed.insert(ch.dominated.begin(), ch.dominated.end());
    }
    for (std::size_t e : face.edges) {
      std::size_t local = 0;
      for (std::size_t g : allowed) local += g != e && a.dg.sees(g, e);
      const std::size_t floor = std::min(in_degree_floor(n), a.dg.in_degree(e));
      if (local < floor) {
        out.push_back({FindingKind::Observation3Violation, a.poly.vertices(),
                       "edge " + std::to_string(e) + " in face " + std::to_string(f) +
                           ": " + std::to_string(local) + " local in-neighbours, floor " +
                           std::to_string(floor)});
      }
    }
  }
  return out;
}

std::vector<ConjectureFinding> run_structure_monitors(const Analysis& a) {
  const std::size_t n = a.poly.size();
  const VisibilityDigraph& dg = a.dg;
  std::vector<ConjectureFinding> out;
  auto add = [&](FindingKind k, std::string detail) {
    out.push_back({k, a.poly.vertices(), std::move(detail)});
  };
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t p = (e + n - 1) % n;
    const std::size_t q = (e + 1) % n;
    if (!dg.sees(e, e) || !dg.sees(p, e) || !dg.sees(q, e) || !dg.sees(e, p) ||
        !dg.sees(e, q)) {
      add(FindingKind::InDegreeBelow3, "edge " + std::to_string(e) + ": backbone broken");
    }
    const std::size_t d = dg.in_degree(e);
    if (d < in_degree_floor(n)) {
      add(FindingKind::InDegreeBelow3,
          "edge " + std::to_string(e) + ": in-degree " + std::to_string(d));
    }
    if (!is_weak(dg, e) && d < non_weak_floor(n)) {
      add(FindingKind::NonWeakBelow4,
          "edge " + std::to_string(e) + ": in-degree " + std::to_string(d));
    }
  }
  for (const auto& g : a.groups) {
    if (g.kind != WeakKind::Other) continue;
    add(FindingKind::WeakRunBadLength,
        "run of " + std::to_string(g.edges.size()) + " weak edges starting at edge " +
            std::to_string(g.edges.front()));
  }
  if (a.crossing) {
    add(FindingKind::ChordCrossing,
        "chords of edges " + std::to_string(a.bottlenecks[a.crossing->first].edge) +
            " and " + std::to_string(a.bottlenecks[a.crossing->second].edge) +
            " cross at " + to_string(a.crossing->at));
  }
  for (auto& f : check_observation3(a)) out.push_back(std::move(f));
  return out;
}

std::vector<ConjectureFinding> run_monitors(const Analysis& a, const GuardPlan& plan) {
  std::vector<ConjectureFinding> out = run_structure_monitors(a);
  if (plan.verdict == Verdict::ExceedsBound) {
    out.push_back({FindingKind::BoundExceeded, a.poly.vertices(),
                   std::to_string(plan.guards.size()) + " guards, budget " +
                       std::to_string(plan.budget)});
  }
  return out;
}

std::vector<ConjectureFinding> run_monitors(const Polygon& poly) {
  Analysis a = analyze(poly);
  GuardPlan plan = place_guards(a);
  return run_monitors(a, plan);
}

}  // namespace edgeguard
