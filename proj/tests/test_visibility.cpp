#include <gtest/gtest.h>

#include <cstdint>

#include "edgeguard/error.hpp"
#include "edgeguard/generators.hpp"
#include "edgeguard/interval_set.hpp"
#include "edgeguard/visibility.hpp"
#include "fixtures.hpp"

using namespace edgeguard;
using fixtures::q;

TEST(IntervalSet, MergesTouchingAndClamps) {
  IntervalSet s;
  s.add(q(1, 2), q(3, 4));
  s.add(q(1, 4), q(1, 2));
  s.add(q(-1), q(1, 8));
  ASSERT_EQ(s.parts().size(), 2u);
  EXPECT_EQ(s.parts()[0], (Interval{0, q(1, 8)}));
  EXPECT_EQ(s.parts()[1], (Interval{q(1, 4), q(3, 4)}));
  EXPECT_EQ(s.measure(), q(1, 8) + q(1, 2));
  EXPECT_EQ(s.to_string(), "{[0, 1/8], [1/4, 3/4]}");
}

TEST(IntervalSet, ComplementAndFull) {
  IntervalSet s = IntervalSet::single(q(1, 4), q(3, 4));
  IntervalSet c = s.complement();
  ASSERT_EQ(c.parts().size(), 2u);
  EXPECT_EQ(c.parts()[0], (Interval{0, q(1, 4)}));
  EXPECT_EQ(c.parts()[1], (Interval{q(3, 4), 1}));
  s.unite(c);
  EXPECT_TRUE(s.is_full());
  EXPECT_TRUE(IntervalSet::full().complement().empty());
  EXPECT_EQ(IntervalSet().complement(), IntervalSet::full());
}

TEST(IntervalSet, DegeneratePieces) {
  IntervalSet s = IntervalSet::single(1, 1);
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(q(1, 2)));
  EXPECT_EQ(s.measure(), 0);
  EXPECT_EQ(s.complement(), IntervalSet::full());
}

TEST(PointSeesEdge, Examples) {
  const Polygon l6 = fixtures::l6();
  EXPECT_TRUE(point_sees_edge(l6, {2, 0}, 3));
  EXPECT_FALSE(point_sees_edge(l6, {2, 1}, 4));
  const Polygon sq = fixtures::sq4();
  for (std::size_t e = 0; e < 4; ++e) {
    for (std::size_t g = 0; g < 4; ++g) {
      EXPECT_TRUE(point_sees_edge(sq, sq.point_on_edge(e, q(1, 3)), g));
    }
  }
}

TEST(PointSeesWholeEdge, L6ReflexVertex) {
  const Polygon l6 = fixtures::l6();
  EXPECT_TRUE(point_sees_whole_edge(l6, {1, 1}, 0));
  EXPECT_TRUE(point_sees_whole_edge(l6, {1, 1}, 5));
  EXPECT_FALSE(point_sees_whole_edge(l6, {2, 1}, 4));
  EXPECT_THROW(point_sees_whole_edge(l6, {q(3, 2), q(3, 2)}, 0), PointOutsidePolygon);
}

TEST(CriticalParameters, SortedFromZeroToOne) {
  const Polygon p = gen_random_simple(10, 3, 64);
  for (std::size_t e = 0; e < p.size(); ++e) {
    const auto c = critical_parameters(p, e);
    ASSERT_GE(c.size(), 2u);
    EXPECT_EQ(c.front(), 0);
    EXPECT_EQ(c.back(), 1);
    for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(c[i - 1], c[i]);
  }
}

TEST(VisiblePortion, SelfIsFull) {
  const Polygon p = gen_random_simple(9, 2, 64);
  for (std::size_t e = 0; e < p.size(); ++e) EXPECT_TRUE(visible_portion(p, e, e).is_full());
}

TEST(VisiblePortion, SquareOppositeEdgesFull) {
  EXPECT_TRUE(visible_portion(fixtures::sq4(), 0, 2).is_full());
}

TEST(VisiblePortion, L6ProperSubset) {
  // From edge 1 ((2,0)-(2,1)) only the far end (0,2) of edge 4 is visible,
  // through the reflex vertex.
  const Polygon l6 = fixtures::l6();
  EXPECT_EQ(visible_portion(l6, 1, 4), IntervalSet::single(1, 1));
  // Edge 2 sees all of edge 4 from its endpoint (1,1).
  EXPECT_TRUE(visible_portion(l6, 2, 4).is_full());
}

TEST(VisiblePortion, InvalidEdgeId) {
  EXPECT_THROW(visible_portion(fixtures::l6(), 6, 0), InvalidEdgeId);
  EXPECT_THROW(fully_sees(fixtures::l6(), 0, 9), InvalidEdgeId);
}

TEST(VisiblePortion, AgreesWithSamplingOracle) {
  constexpr std::size_t k = 9;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Polygon p = gen_random_simple(8, seed, 64);
    for (std::size_t g = 0; g < p.size(); ++g) {
      for (std::size_t e = 0; e < p.size(); ++e) {
        const IntervalSet portion = visible_portion(p, g, e);
        const auto row = fixtures::sampled_row(p, g, e, k);
        for (std::size_t j = 0; j < k; ++j) {
          if (row[j]) {
            EXPECT_TRUE(portion.contains(Scalar(j) / Scalar(k - 1)))
                << "seed " << seed << " g " << g << " e " << e << " j " << j;
          }
        }
        for (const auto& iv : portion.parts()) {
          const Point m = p.point_on_edge(e, (iv.lo + iv.hi) / 2);
          EXPECT_TRUE(point_sees_edge(p, m, g));
        }
      }
    }
  }
}

TEST(VisiblePortion, StableUnderRefinement) {
  const Polygon p = gen_random_simple(8, 5, 64);
  VisibilityEngine engine(p);
  std::vector<Scalar> extra;
  for (long i = 1; i < 23; ++i) extra.push_back(q(i, 23));
  for (std::size_t g = 0; g < p.size(); ++g) {
    for (std::size_t e = 0; e < p.size(); ++e) {
      EXPECT_EQ(engine.visible_portion(g, e), engine.visible_portion_refined(g, e, extra));
    }
  }
}

TEST(Digraph, L6Golden) {
  const VisibilityDigraph dg = build_digraph(fixtures::l6());
  EXPECT_EQ(dg.bit_string(), fixtures::kL6Adjacency);
  // In-degree counts other edges: column sums of the golden rows minus one.
  const std::string bits = fixtures::kL6Adjacency;
  for (std::size_t e = 0; e < 6; ++e) {
    std::size_t col = 0;
    for (std::size_t g = 0; g < 6; ++g) col += bits[g * 6 + e] == '1';
    EXPECT_EQ(dg.in_degree(e), col - 1);
  }
  EXPECT_TRUE(dg.sees(3, 0));
  EXPECT_TRUE(dg.sees(0, 4));
  EXPECT_FALSE(dg.sees(1, 4));
  EXPECT_FALSE(dg.sees(4, 1));
}

TEST(Digraph, ConvexIsComplete) {
  for (std::size_t n : {3u, 4u, 7u, 12u}) {
    const VisibilityDigraph dg = build_digraph(gen_convex(n, 1, 0));
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t e = 0; e < n; ++e) EXPECT_TRUE(dg.sees(g, e));
      EXPECT_EQ(dg.in_degree(g), n - 1);
      EXPECT_EQ(dg.out_degree(g), n - 1);
    }
  }
  EXPECT_EQ(build_digraph(fixtures::sq4()).bit_string(), std::string(16, '1'));
}

TEST(Digraph, BackboneOnRandomPolygons) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Polygon p = gen_random_simple(14, seed, 0);
    const VisibilityDigraph dg = build_digraph(p);
    const std::size_t n = p.size();
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t a = (e + n - 1) % n;
      const std::size_t b = (e + 1) % n;
      EXPECT_TRUE(dg.sees(e, e));
      EXPECT_TRUE(dg.sees(a, e) && dg.sees(b, e) && dg.sees(e, a) && dg.sees(e, b));
      EXPECT_GE(dg.in_degree(e), 3u);
    }
  }
}

TEST(Digraph, StaircaseHasOneWayPair) {
  const VisibilityDigraph dg = build_digraph(gen_staircase(8, 1));
  bool found = false;
  for (std::size_t a = 0; a < dg.size(); ++a) {
    for (std::size_t b = 0; b < dg.size(); ++b) found = found || (dg.sees(a, b) && !dg.sees(b, a));
  }
  EXPECT_TRUE(found);
}

TEST(Digraph, EngineMatchesFreeFunction) {
  const Polygon p = gen_random_simple(10, 7, 64);
  VisibilityEngine engine(p);
  const VisibilityDigraph dg = build_digraph(p);
  for (std::size_t g = 0; g < p.size(); ++g) {
    for (std::size_t e = 0; e < p.size(); ++e) {
      EXPECT_EQ(engine.fully_sees(g, e), dg.sees(g, e));
      EXPECT_EQ(fully_sees(p, g, e), dg.sees(g, e));
    }
  }
}
