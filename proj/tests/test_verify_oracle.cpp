#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>

#include "edgeguard/error.hpp"
#include "edgeguard/generators.hpp"
#include "edgeguard/guards.hpp"
#include "edgeguard/verify_oracle.hpp"
#include "fixtures.hpp"

using namespace edgeguard;
using fixtures::q;

TEST(VerifyEdgeCoverage, Examples) {
  const auto sq = build_digraph(fixtures::sq4());
  EXPECT_TRUE(verify_edge_coverage(sq, {0}).empty());
  const auto l6 = build_digraph(fixtures::l6());
  EXPECT_TRUE(verify_edge_coverage(l6, {3}).empty());
  EXPECT_TRUE(verify_edge_coverage(l6, {0}).empty());
  EXPECT_EQ(verify_edge_coverage(l6, {1}), (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(verify_edge_coverage(l6, {}).size(), 6u);
  EXPECT_THROW(verify_edge_coverage(l6, {7}), InvalidEdgeId);
}

TEST(VerifyPointwise, L6) {
  const Polygon l6 = fixtures::l6();
  EXPECT_TRUE(verify_boundary_pointwise(l6, {3}).boundary_fully_covered);
  const CoverageReport r = verify_boundary_pointwise(l6, {1});
  EXPECT_FALSE(r.boundary_fully_covered);
  ASSERT_EQ(r.uncovered.size(), 2u);
  EXPECT_EQ(r.uncovered[0].first, 3u);
  EXPECT_EQ(r.uncovered[1].first, 4u);
  // From edge 1 only the reflex corner (1,1) of edge 3 is visible.
  EXPECT_EQ(r.edges[3].seen, IntervalSet::single(0, 0));
  EXPECT_EQ(r.edges[4].seen, IntervalSet::single(1, 1));
  EXPECT_EQ(r.edges[0].whole_edge_guards, std::vector<std::size_t>{1});
}

TEST(VerifyPointwise, ConsistentWithWholeEdgeCheck) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Polygon p = gen_random_simple(11, seed, 64);
    const auto dg = build_digraph(p);
    const std::vector<std::size_t> guards{0, 4};
    const auto whole = verify_edge_coverage(dg, guards);
    const CoverageReport r = verify_boundary_pointwise(p, guards);
    // Pointwise gaps only on edges no guard fully sees.
    for (const auto& [e, gap] : r.uncovered) {
      EXPECT_TRUE(std::binary_search(whole.begin(), whole.end(), e));
      EXPECT_FALSE(gap.empty());
    }
    if (whole.empty()) EXPECT_TRUE(r.boundary_fully_covered);
    for (std::size_t e = 0; e < p.size(); ++e) {
      const bool fully = !r.edges[e].whole_edge_guards.empty();
      EXPECT_EQ(fully, !std::binary_search(whole.begin(), whole.end(), e));
    }
  }
}

TEST(MinGuardSet, Examples) {
  const auto sq = min_guard_set(build_digraph(fixtures::sq4()), 4);
  ASSERT_TRUE(sq);
  EXPECT_EQ(sq->size, 1u);
  EXPECT_EQ(sq->guards, std::vector<std::size_t>{0});
  const auto l6 = min_guard_set(build_digraph(fixtures::l6()), 6);
  ASSERT_TRUE(l6);
  EXPECT_EQ(l6->size, 1u);
  EXPECT_EQ(l6->guards, std::vector<std::size_t>{0});
}

TEST(MinGuardSet, RespectsLimit) {
  const auto dg = build_digraph(gen_random_simple(12, 1, 0));
  const auto best = fixtures::brute_min_cover(dg);
  ASSERT_GT(best.size, 1u);
  EXPECT_FALSE(min_guard_set(dg, best.size - 1));
  const auto r = min_guard_set(dg, best.size);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->size, best.size);
}

TEST(MinGuardSet, MatchesExhaustiveSearch) {
  for (std::size_t n = 5; n <= 10; ++n) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const auto dg = build_digraph(gen_random_simple(n, seed, 0));
      const auto best = fixtures::brute_min_cover(dg);
      const auto r = min_guard_set(dg, n);
      ASSERT_TRUE(r);
      EXPECT_EQ(r->size, best.size) << "n " << n << " seed " << seed;
      EXPECT_EQ(r->guards, best.guards) << "n " << n << " seed " << seed;
    }
  }
}

TEST(MinGuardSet, MonotoneUnderMasking) {
  // Dropping visibility entries (other than the self loops) cannot make the
  // optimum smaller.
  const Polygon p = gen_random_simple(10, 3, 0);
  const auto dg = build_digraph(p);
  const auto base = min_guard_set(dg, p.size());
  ASSERT_TRUE(base);
  for (std::size_t g = 0; g < p.size(); ++g) {
    for (std::size_t e = 0; e < p.size(); ++e) {
      if (g == e || !dg.sees(g, e)) continue;
      VisibilityDigraph masked = dg;
      masked.set(g, e, false);
      const auto r = min_guard_set(masked, p.size());
      ASSERT_TRUE(r);
      EXPECT_GE(r->size, base->size);
    }
  }
}

TEST(SampledCheck, Agrees) {
  const Polygon sq = fixtures::sq4();
  const SampleReport a = sampled_visibility_check(sq, 0, 2, 8);
  EXPECT_TRUE(a.agrees());
  EXPECT_EQ(a.samples_visible, 8u);
  const Polygon l6 = fixtures::l6();
  EXPECT_TRUE(sampled_visibility_check(l6, 2, 4, 64).agrees());
  const SampleReport b = sampled_visibility_check(l6, 1, 4, 16);
  EXPECT_TRUE(b.agrees());
  EXPECT_EQ(b.samples_visible, 1u);  // the corner (0,2)
}

TEST(SampledCheck, RandomPolygons) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Polygon p = gen_random_simple(9, seed, 64);
    for (std::size_t g = 0; g < p.size(); ++g) {
      for (std::size_t e = 0; e < p.size(); ++e) {
        EXPECT_TRUE(sampled_visibility_check(p, g, e, 7).agrees());
      }
    }
  }
}

TEST(Floors, SmallPolygons) {
  EXPECT_EQ(in_degree_floor(3), 2u);
  EXPECT_EQ(in_degree_floor(4), 3u);
  EXPECT_EQ(in_degree_floor(30), 3u);
  EXPECT_EQ(non_weak_floor(4), 3u);
  EXPECT_EQ(non_weak_floor(5), 4u);
  EXPECT_EQ(non_weak_floor(30), 4u);
}

TEST(Monitors, CleanOnFixtures) {
  EXPECT_TRUE(run_monitors(fixtures::sq4()).empty());
  EXPECT_TRUE(run_monitors(fixtures::l6()).empty());
  EXPECT_TRUE(run_monitors(gen_comb(3)).empty());
  EXPECT_TRUE(check_observation3(analyze(fixtures::l6())).empty());
}

TEST(Monitors, ReportsChordCrossing) {
  const Polygon p = gen_random_simple(8, 1, 0);
  const auto findings = run_monitors(p);
  const auto it = std::find_if(findings.begin(), findings.end(), [](const auto& f) {
    return f.kind == FindingKind::ChordCrossing;
  });
  ASSERT_NE(it, findings.end());
  EXPECT_EQ(it->polygon, p.vertices());
  EXPECT_FALSE(it->detail.empty());
}

TEST(Monitors, FloorsHoldOnRandomPolygons) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Polygon p = gen_random_simple(16, seed, 0);
    for (const auto& f : run_monitors(p)) {
      EXPECT_NE(f.kind, FindingKind::InDegreeBelow3);
      EXPECT_NE(f.kind, FindingKind::NonWeakBelow4);
      EXPECT_NE(f.kind, FindingKind::BoundExceeded);
    }
  }
}

TEST(Monitors, BoundExceededNeedsOverBudgetPlan) {
  const Analysis a = analyze(fixtures::sq4());
  GuardPlan plan = place_guards(a);
  plan.guards.push_back({1, GuardStep::Remainder, 0});
  plan.verdict = Verdict::ExceedsBound;
  const auto findings = run_monitors(a, plan);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].kind, FindingKind::BoundExceeded);
  EXPECT_STREQ(to_string(FindingKind::BoundExceeded), "BoundExceeded");
}
