#include "edgeguard/guards.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "edgeguard/error.hpp"
#include "edgeguard/verify_oracle.hpp"

namespace edgeguard {

const char* to_string(GuardStep s) {
  switch (s) {
    case GuardStep::WeakGroup:
      return "weak-group";
    case GuardStep::Bottleneck:
      return "bottleneck";
    case GuardStep::Remainder:
      return "remainder";
    case GuardStep::Fallback:
      return "fallback";
  }
  return "?";
}

const char* to_string(Verdict v) {
  return v == Verdict::WithinBound ? "within-bound" : "exceeds-bound";
}

const char* to_string(RescuePath r) {
  switch (r) {
    case RescuePath::None:
      return "none";
    case RescuePath::Greedy:
      return "greedy";
    case RescuePath::Exact:
      return "exact";
  }
  return "?";
}

std::vector<std::size_t> cover_of(const VisibilityDigraph& dg, std::size_t g) {
  if (g >= dg.size()) throw InvalidEdgeId(g, dg.size());
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < dg.size(); ++e) {
    if (dg.sees(g, e)) out.push_back(e);
  }
  return out;
}

std::size_t CoverageState::uncovered_count() const {
  return static_cast<std::size_t>(
      std::count_if(marks_.begin(), marks_.end(), [](const auto& m) { return m.empty(); }));
}

std::size_t CoverageState::gain(const VisibilityDigraph& dg, std::size_t g) const {
  std::size_t k = 0;
  for (std::size_t e = 0; e < size(); ++e) k += dg.sees(g, e) && !covered(e);
  return k;
}

std::size_t CoverageState::place(const VisibilityDigraph& dg, std::size_t g) {
  std::size_t k = 0;
  for (std::size_t e = 0; e < size(); ++e) {
    if (!dg.sees(g, e)) continue;
    k += !covered(e);
    marks_[e].push_back(g);
  }
  return k;
}

std::vector<std::size_t> GuardPlan::guard_edges() const {
  std::vector<std::size_t> out;
  for (const auto& g : guards) out.push_back(g.edge);
  return out;
}

std::size_t guard_budget(std::size_t n) { return (n + 3) / 4; }

namespace {

bool covers_all(const VisibilityDigraph& dg, std::size_t g,
                const std::vector<std::size_t>& edges) {
  return std::all_of(edges.begin(), edges.end(),
                     [&](std::size_t e) { return dg.sees(g, e); });
}

// True if some maximal circular run of uncovered edges, with covered edges
// on both sides, is shorter than 4 once g is placed.
bool leaves_short_gap(const VisibilityDigraph& dg, const CoverageState& st,
                      std::size_t g) {
  const std::size_t n = st.size();
  std::vector<char> cov(n);
  for (std::size_t e = 0; e < n; ++e) cov[e] = st.covered(e) || dg.sees(g, e);
  std::size_t start = n;
  for (std::size_t e = 0; e < n; ++e) {
    if (cov[e]) {
      start = e;
      break;
    }
  }
  if (start == n) return false;
  std::size_t run = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t e = (start + i) % n;
    if (cov[e]) {
      if (run > 0 && run < 4) return true;
      run = 0;
    } else {
      ++run;
    }
  }
  return false;
}

GuardPlan finalize(const VisibilityDigraph& dg, std::vector<GuardPlacement> guards) {
  const std::size_t n = dg.size();
  GuardPlan plan;
  CoverageState st(n);
  for (auto& g : guards) {
    const std::size_t open = st.uncovered_count();
    g.marginal = st.place(dg, g.edge);
    FourRStep step;
    step.guards = plan.four_r_trace.size() + 1;
    step.covered = n - st.uncovered_count();
    step.meets_4r = step.covered >= std::min(4 * step.guards, n);
    step.low_marginal = g.marginal < 4 && open >= 4;
    plan.four_r_trace.push_back(step);
  }
  plan.guards = std::move(guards);
  for (std::size_t e = 0; e < n; ++e) {
    if (st.covered(e)) plan.covered.push_back(e);
  }
  plan.budget = guard_budget(n);
  plan.verdict = plan.guards.size() <= plan.budget ? Verdict::WithinBound
                                                   : Verdict::ExceedsBound;
  return plan;
}

}  // namespace

std::vector<GuardPlacement> step1_weak_groups(const VisibilityDigraph& dg,
                                              const std::vector<WeakGroup>& groups,
                                              CoverageState& st,
                                              std::vector<std::size_t>* flagged) {
  const std::size_t n = dg.size();
  std::vector<GuardPlacement> out;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& edges = groups[gi].edges;
    if (std::all_of(edges.begin(), edges.end(),
                    [&](std::size_t e) { return st.covered(e); })) {
      continue;
    }
    std::vector<std::size_t> cand = edges;
    cand.push_back((edges.front() + n - 1) % n);
    cand.push_back((edges.back() + 1) % n);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    auto pick = [&](bool need_all) -> std::optional<std::size_t> {
      std::optional<std::size_t> best;
      std::size_t best_gain = 0;
      for (std::size_t g : cand) {
        if (need_all && !covers_all(dg, g, edges)) continue;
        std::size_t k = st.gain(dg, g);
        if (!best || k > best_gain) {
          best = g;
          best_gain = k;
        }
      }
      return best;
    };
    std::optional<std::size_t> g = pick(true);
    if (!g) {
      if (flagged) flagged->push_back(gi);
      g = pick(false);
    }
    out.push_back({*g, GuardStep::WeakGroup, st.place(dg, *g)});
  }
  return out;
}

std::vector<GuardPlacement> step2_bottlenecks(const Polygon& poly,
                                              const VisibilityDigraph& dg,
                                              const std::vector<Bottleneck>& normals,
                                              const EdgeSetPartition& part,
                                              CoverageState& st) {
  struct Item {
    std::size_t smaller;
    std::size_t edge;
    std::size_t index;
  };
  const bool have_faces = part.chord_of.size() == normals.size();
  std::vector<Item> items;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    std::size_t smaller = poly.size();
    if (have_faces) {
      const Chord& c = part.chords[part.chord_of[i]];
      smaller = std::min(part.faces[c.inner_face].edges.size(),
                         part.faces[c.outer_face].edges.size());
    }
    items.push_back({smaller, normals[i].edge, i});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.smaller, a.edge, a.index) < std::tie(b.smaller, b.edge, b.index);
  });

  std::vector<GuardPlacement> out;
  for (const Item& it : items) {
    const Bottleneck& b = normals[it.index];
    bool open = false;
    if (have_faces) {
      const Chord& c = part.chords[part.chord_of[it.index]];
      for (std::size_t f : {c.inner_face, c.outer_face}) {
        for (std::size_t e : part.faces[f].edges) open = open || !st.covered(e);
      }
    } else {
      open = st.uncovered_count() > 0;
    }
    if (!open) continue;

    std::vector<std::size_t> cand{poly.prev(b.vertex), b.vertex, b.edge};
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t best = cand.front();
    std::size_t best_gain = 0;
    bool best_short = true;
    bool first = true;
    for (std::size_t g : cand) {
      const std::size_t k = st.gain(dg, g);
      const bool short_gap = leaves_short_gap(dg, st, g);
      if (first || k > best_gain || (k == best_gain && best_short && !short_gap)) {
        best = g;
        best_gain = k;
        best_short = short_gap;
        first = false;
      }
    }
    if (best_gain == 0) continue;
    out.push_back({best, GuardStep::Bottleneck, st.place(dg, best)});
  }
  return out;
}

std::vector<GuardPlacement> step3_remainder(const VisibilityDigraph& dg,
                                            CoverageState& st) {
  std::vector<GuardPlacement> out;
  while (st.uncovered_count() > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t g = 0; g < dg.size(); ++g) {
      const std::size_t k = st.gain(dg, g);
      if (k > best_gain) {
        best = g;
        best_gain = k;
      }
    }
    out.push_back({best, GuardStep::Remainder, st.place(dg, best)});
  }
  return out;
}

GuardPlan prune_redundant(const VisibilityDigraph& dg, const GuardPlan& plan) {
  const std::size_t n = dg.size();
  std::vector<GuardPlacement> kept = plan.guards;
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<char> cov(n, 0);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i) continue;
      for (std::size_t e = 0; e < n; ++e) cov[e] = cov[e] || dg.sees(kept[j].edge, e);
    }
    if (std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; })) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  GuardPlan out = finalize(dg, std::move(kept));
  out.rescue_path = plan.rescue_path;
  out.flagged_groups = plan.flagged_groups;
  return out;
}

GuardPlan place_guards(const Analysis& a, const GuardOptions& opt) {
  const VisibilityDigraph& dg = a.dg;
  const std::size_t n = dg.size();
  CoverageState st(n);
  std::vector<GuardPlacement> guards;
  std::vector<std::size_t> flagged;

  auto append = [&guards](std::vector<GuardPlacement> more) {
    guards.insert(guards.end(), more.begin(), more.end());
  };
  if (!opt.skip_weak_preprocess) append(step1_weak_groups(dg, a.groups, st, &flagged));
  if (!a.normals_cross) {
    append(step2_bottlenecks(a.poly, dg, normal_only(a.bottlenecks), a.partition, st));
  }
  append(step3_remainder(dg, st));

  GuardPlan plan;
  plan.guards = std::move(guards);
  plan.flagged_groups = std::move(flagged);
  plan = prune_redundant(dg, plan);
  if (plan.verdict == Verdict::WithinBound || opt.no_rescue) return plan;

  CoverageState fresh(n);
  GuardPlan greedy;
  greedy.guards = step3_remainder(dg, fresh);
  for (auto& g : greedy.guards) g.step = GuardStep::Fallback;
  greedy.rescue_path = RescuePath::Greedy;
  greedy.flagged_groups = plan.flagged_groups;
  greedy = prune_redundant(dg, greedy);
  if (greedy.guards.size() < plan.guards.size()) plan = std::move(greedy);
  if (plan.verdict == Verdict::WithinBound || n > opt.exact_threshold) return plan;

  if (auto best = min_guard_set(dg, plan.budget)) {
    GuardPlan exact;
    for (std::size_t g : best->guards) exact.guards.push_back({g, GuardStep::Fallback, 0});
    exact.rescue_path = RescuePath::Exact;
    exact.flagged_groups = plan.flagged_groups;
    plan = prune_redundant(dg, exact);
  }
  return plan;
}

GuardPlan place_guards(const Polygon& poly, const GuardOptions& opt) {
  return place_guards(analyze(poly), opt);
}

}  // namespace edgeguard
