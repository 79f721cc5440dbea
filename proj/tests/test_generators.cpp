#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>

#include "edgeguard/error.hpp"
#include "edgeguard/generators.hpp"
#include "edgeguard/structure.hpp"
#include "fixtures.hpp"

using namespace edgeguard;

namespace {

bool all_integer(const Polygon& p) {
  for (const auto& v : p.vertices()) {
    if (v.x.get_den() != 1 || v.y.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

TEST(Generators, EngineSequenceIsStandard) {
  // The standard fixes the 10000th output of a default-seeded engine.
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ULL);
}

TEST(Generators, FamilyNamesRoundTrip) {
  for (Family f : {Family::RandomSimple, Family::Convex, Family::Comb, Family::ArrowBundle,
                   Family::Staircase}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("spiral"));
}

TEST(Generators, DefaultBoundingBox) {
  EXPECT_EQ(default_bbox(3), 64);
  EXPECT_EQ(default_bbox(16), 64);
  EXPECT_EQ(default_bbox(30), 120);
}

TEST(Generators, SameSpecSameVertices) {
  for (Family f : {Family::RandomSimple, Family::Convex, Family::Staircase}) {
    const GenSpec spec{f, 12, 5, 0};
    EXPECT_EQ(generate(spec).vertices(), generate(spec).vertices());
  }
  EXPECT_NE(gen_random_simple(12, 1, 0).vertices(), gen_random_simple(12, 2, 0).vertices());
}

TEST(Generators, RandomSimpleIsValidAndInBox) {
  for (std::size_t n : {3u, 4u, 9u, 20u, 30u}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const Polygon p = gen_random_simple(n, seed, 0);
      EXPECT_EQ(p.size(), n);
      EXPECT_TRUE(all_integer(p));
      // Re-validation of the vertex list must accept it unchanged.
      EXPECT_EQ(Polygon::validate(p.vertices()).vertices(), p.vertices());
      const Scalar box = default_bbox(n);
      for (const auto& v : p.vertices()) {
        EXPECT_GE(v.x, 0);
        EXPECT_LT(v.x, box);
        EXPECT_GE(v.y, 0);
        EXPECT_LT(v.y, box);
      }
    }
  }
}

TEST(Generators, TooSmallFails) {
  EXPECT_THROW(gen_random_simple(2, 1, 0), GenerationFailed);
  EXPECT_THROW(gen_convex(2, 1, 0), GenerationFailed);
  EXPECT_THROW(gen_comb(0), GenerationFailed);
  EXPECT_THROW(gen_arrow_bundle(0), GenerationFailed);
  EXPECT_THROW(gen_staircase(7, 1), GenerationFailed);
  EXPECT_THROW(gen_staircase(4, 1), GenerationFailed);
}

TEST(Generators, ConvexIsStrictlyConvex) {
  for (std::size_t n : {3u, 5u, 8u, 16u}) {
    const Polygon p = gen_convex(n, 3, 0);
    ASSERT_EQ(p.size(), n);
    EXPECT_TRUE(all_integer(p));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(orient(p.vertex(i), p.vertex((i + 1) % n), p.vertex((i + 2) % n)), 1);
    }
  }
}

TEST(Generators, CombShape) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const Polygon p = gen_comb(k);
    EXPECT_EQ(p.size(), 4 * k + 2);
    EXPECT_TRUE(all_integer(p));
    for (std::size_t e = 0; e < p.size(); ++e) {
      const Point& a = p.source(e);
      const Point& b = p.target(e);
      EXPECT_TRUE(a.x == b.x || a.y == b.y);
    }
  }
}

TEST(Generators, ArrowBundleHasOneArrowheadPerArrow) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const Polygon p = gen_arrow_bundle(k);
    EXPECT_EQ(p.size(), 6 * k + 2);
    const auto groups = weak_edge_groups(build_digraph(p));
    ASSERT_EQ(groups.size(), k);
    std::set<std::size_t> members;
    for (const auto& g : groups) {
      EXPECT_EQ(g.kind, WeakKind::Arrowhead);
      EXPECT_EQ(g.edges.size(), 4u);
      members.insert(g.edges.begin(), g.edges.end());
    }
    EXPECT_EQ(members.size(), 4 * k);
  }
}

TEST(Generators, StaircaseHasAsymmetricPair) {
  for (std::size_t n = 6; n <= 14; n += 2) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Polygon p = gen_staircase(n, seed);
      ASSERT_EQ(p.size(), n);
      const auto dg = build_digraph(p);
      bool found = false;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) found = found || (dg.sees(a, b) && !dg.sees(b, a));
      }
      EXPECT_TRUE(found) << "n " << n << " seed " << seed;
    }
  }
}

TEST(Generators, GenerateDispatches) {
  EXPECT_EQ(generate({Family::Comb, 2, 1, 0}).vertices(), gen_comb(2).vertices());
  EXPECT_EQ(generate({Family::ArrowBundle, 2, 1, 0}).vertices(), gen_arrow_bundle(2).vertices());
  EXPECT_EQ(generate({Family::Convex, 7, 4, 200}).vertices(), gen_convex(7, 4, 200).vertices());
  EXPECT_EQ(generate({Family::Staircase, 8, 2, 0}).vertices(), gen_staircase(8, 2).vertices());
}
