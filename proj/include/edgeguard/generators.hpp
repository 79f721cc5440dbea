#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "edgeguard/geometry.hpp"

namespace edgeguard {

// Polygon families. All output coordinates are integers and every
// generator is a pure function of its GenSpec.
//
// Randomized families draw from std::mt19937_64 seeded with `seed` (the
// engine's output sequence is fixed by the C++ standard). Integers in
// [0, m) are taken as `engine() % m`; shuffles are Fisher-Yates from the
// back using the same reduction. These rules are part of the file-level
// contract: the same GenSpec yields the same vertex list everywhere.
enum class Family { RandomSimple, Convex, Comb, ArrowBundle, Staircase };

const char* to_string(Family f);
std::optional<Family> parse_family(const std::string& name);

struct GenSpec {
  Family family = Family::RandomSimple;
  std::size_t size = 3;  // n for random/convex/staircase, k for comb/arrows
  std::uint64_t seed = 1;
  std::int64_t bbox = 0;  // 0 selects the family default
};

Polygon generate(const GenSpec& spec);

// Default bounding box: max(64, 4n).
std::int64_t default_bbox(std::size_t n);

// n distinct integer points in general position inside [0, bbox)^2, toured
// in draw order and untangled by 2-opt until simple. Throws
// GenerationFailed after the retry budget.
Polygon gen_random_simple(std::size_t n, std::uint64_t seed, std::int64_t bbox);

// Strictly convex integer polygon from random edge vectors sorted by angle.
Polygon gen_convex(std::size_t n, std::uint64_t seed, std::int64_t bbox);

// Axis-aligned comb with k narrow prongs: 4k + 2 vertices.
Polygon gen_comb(std::size_t k);

// k arrows (4-edge head on a 2-edge shaft) joined at a common base and
// closed by 2 base edges: 6k + 2 vertices. Every arrowhead comes out as a
// run of 4 weak edges.
Polygon gen_arrow_bundle(std::size_t k);

// Monotone staircase above a long base edge, n even >= 6. Guaranteed to
// contain an asymmetric pair of edges (one fully sees the other but not
// conversely); otherwise GenerationFailed.
Polygon gen_staircase(std::size_t n, std::uint64_t seed);

}  // namespace edgeguard
