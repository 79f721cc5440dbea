#include "edgeguard/report.hpp"

#include "edgeguard/error.hpp"

namespace edgeguard {

Json scalar_json(const Scalar& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

Json point_json(const Point& p) { return Json::array({scalar_json(p.x), scalar_json(p.y)}); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw Error("expected an integer or \"p/q\" string");
  Scalar v;
  if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0) {
    throw Error("malformed rational '" + j.get<std::string>() + "'");
  }
  v.canonicalize();
  return v;
}

Json polygon_json(const Polygon& poly) {
  Json verts = Json::array();
  for (const auto& p : poly.vertices()) verts.push_back(point_json(p));
  return {{"n", poly.size()}, {"vertices", verts}, {"reversed_on_input", poly.was_reversed()}};
}

Json digraph_json(const VisibilityDigraph& dg) {
  return {{"in_degrees", dg.in_degrees()}, {"adjacency", dg.bit_string()}};
}

Json weak_groups_json(const std::vector<WeakGroup>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back({{"edges", g.edges}, {"kind", to_string(g.kind)}});
  return out;
}

Json bottlenecks_json(const std::vector<Bottleneck>& bs) {
  Json out = Json::array();
  for (const auto& b : bs) {
    out.push_back({{"edge", b.edge},
                   {"vertex", b.vertex},
                   {"foot", point_json(b.foot)},
                   {"t", scalar_json(b.t)},
                   {"dist2", scalar_json(b.dist2)},
                   {"kind", to_string(b.kind)}});
  }
  return out;
}

Json faces_json(const EdgeSetPartition& part) {
  Json out = Json::array();
  for (const auto& f : part.faces) out.push_back({{"edges", f.edges}, {"chords", f.chords}});
  return out;
}

namespace {

Json chords_json(const EdgeSetPartition& part) {
  Json out = Json::array();
  for (const auto& c : part.chords) {
    out.push_back({{"vertex", c.vertex},
                   {"foot", point_json(c.foot)},
                   {"from", scalar_json(c.from)},
                   {"to", scalar_json(c.to)},
                   {"inner_face", c.inner_face},
                   {"outer_face", c.outer_face},
                   {"dominated", c.dominated}});
  }
  return out;
}

Json crossing_json(const Analysis& a) {
  if (!a.crossing) return nullptr;
  return {{"first_edge", a.bottlenecks[a.crossing->first].edge},
          {"second_edge", a.bottlenecks[a.crossing->second].edge},
          {"at", point_json(a.crossing->at)},
          {"normal_chords_cross", a.normals_cross}};
}

Json conventions_json() {
  return {{"in_degree", "other-edges"},
          {"weak_edge", "in-degree-3-and-n-at-least-5"},
          {"dominating_vertex", "nearest-inward-vertex-seeing-whole-edge"},
          {"local_in_degree_scope", "face-edges-and-bounding-chord-edges"}};
}

Json header(const Polygon& poly) {
  return {{"schema_version", kSchemaVersion},
          {"model", "whole-edge"},
          {"conventions", conventions_json()},
          {"polygon", polygon_json(poly)}};
}

Json structure_sections(const Analysis& a) {
  Json r = header(a.poly);
  r["digraph"] = digraph_json(a.dg);
  r["weak_groups"] = weak_groups_json(a.groups);
  r["bottlenecks"] = bottlenecks_json(a.bottlenecks);
  r["crossing"] = crossing_json(a);
  r["faces"] = faces_json(a.partition);
  r["chords"] = chords_json(a.partition);
  return r;
}

}  // namespace

Json plan_json(const GuardPlan& plan) {
  Json guards = Json::array();
  for (const auto& g : plan.guards) {
    guards.push_back({{"edge", g.edge}, {"step", to_string(g.step)}, {"marginal", g.marginal}});
  }
  Json trace = Json::array();
  for (const auto& s : plan.four_r_trace) {
    trace.push_back({{"guards", s.guards},
                     {"covered", s.covered},
                     {"meets_4r", s.meets_4r},
                     {"low_marginal", s.low_marginal}});
  }
  return {{"guards", guards},
          {"guards_used", plan.guards.size()},
          {"budget", plan.budget},
          {"verdict", to_string(plan.verdict)},
          {"four_r_trace", trace},
          {"rescue_path", to_string(plan.rescue_path)},
          {"flagged_groups", plan.flagged_groups}};
}

Json verification_json(const Polygon& poly, const VisibilityDigraph& dg,
                       const std::vector<std::size_t>& guards) {
  const std::vector<std::size_t> uncovered = verify_edge_coverage(dg, guards);
  const CoverageReport rep = verify_boundary_pointwise(poly, guards);
  Json gaps = Json::array();
  for (const auto& [e, set] : rep.uncovered) {
    Json parts = Json::array();
    for (const auto& iv : set.parts()) {
      parts.push_back(Json::array({scalar_json(iv.lo), scalar_json(iv.hi)}));
    }
    gaps.push_back({{"edge", e}, {"gaps", parts}});
  }
  return {{"model", "whole-edge"},
          {"guards", guards},
          {"uncovered_edges", uncovered},
          {"whole_edge_covered", uncovered.empty()},
          {"pointwise_covered", rep.boundary_fully_covered},
          {"pointwise_gaps", gaps}};
}

Json findings_json(const std::vector<ConjectureFinding>& findings) {
  Json out = Json::array();
  for (const auto& f : findings) out.push_back({{"kind", to_string(f.kind)}, {"detail", f.detail}});
  return out;
}

Json oracle_json(const std::optional<GuardSet>& result, std::size_t limit) {
  Json o = {{"limit", limit}};
  if (result) {
    o["optimal_guards"] = result->size;
    o["witness"] = result->guards;
  } else {
    o["optimal_guards"] = nullptr;
    o["witness"] = nullptr;
  }
  return o;
}

Json analysis_report(const Analysis& a) {
  Json r = structure_sections(a);
  r["findings"] = findings_json(run_structure_monitors(a));
  return r;
}

Json guards_report(const Analysis& a, const GuardPlan& plan) {
  Json r = structure_sections(a);
  r["plan"] = plan_json(plan);
  r["verification"] = verification_json(a.poly, a.dg, plan.guard_edges());
  r["findings"] = findings_json(run_monitors(a, plan));
  return r;
}

Json verify_report(const Polygon& poly, const VisibilityDigraph& dg,
                   const std::vector<std::size_t>& guards) {
  Json v = verification_json(poly, dg, guards);
  return {{"schema_version", kSchemaVersion}, {"model", "whole-edge"}, {"verification", v}};
}

Json oracle_report(const Polygon& poly, const std::optional<GuardSet>& result,
                   std::size_t limit) {
  Json r = header(poly);
  r["oracle"] = oracle_json(result, limit);
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace edgeguard
