#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "edgeguard/geometry.hpp"
#include "edgeguard/visibility.hpp"

namespace fixtures {

using edgeguard::Point;
using edgeguard::Polygon;
using edgeguard::Scalar;

inline std::vector<Point> sq4_points() { return {{0, 0}, {4, 0}, {4, 4}, {0, 4}}; }
inline std::vector<Point> l6_points() {
  return {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
}
inline std::vector<Point> bowtie_points() { return {{0, 0}, {2, 2}, {2, 0}, {0, 2}}; }

inline Polygon sq4() { return Polygon::validate(sq4_points()); }
inline Polygon l6() { return Polygon::validate(l6_points()); }

// Full-visibility rows of L6, adjacency[g][e], worked out by hand. Edge 1
// ((2,0)-(2,1)) misses the upper arm, edges 3 and 4; edge 4 ((1,2)-(0,2))
// misses the right arm, edges 1 and 2. Edges 3 and 2 still see them from
// the reflex corner (1,1).
inline const char* kL6Adjacency =
    "111111"
    "111001"
    "111111"
    "111111"
    "100111"
    "111111";

inline Scalar q(long num, long den = 1) {
  Scalar v(num, den);
  v.canonicalize();
  return v;
}

// Independent sampling oracle: the parameters among i/(k-1) on e from which
// some sample point on g is visible, decided by sees() alone.
inline std::vector<bool> sampled_row(const Polygon& poly, std::size_t g, std::size_t e,
                                     std::size_t k) {
  std::vector<Point> gs;
  for (std::size_t i = 0; i < k; ++i) {
    gs.push_back(poly.point_on_edge(g, Scalar(i) / Scalar(k - 1)));
  }
  std::vector<bool> out;
  for (std::size_t j = 0; j < k; ++j) {
    const Point qpt = poly.point_on_edge(e, Scalar(j) / Scalar(k - 1));
    bool any = false;
    for (const auto& p : gs) any = any || edgeguard::sees(poly, p, qpt);
    out.push_back(any);
  }
  return out;
}

// Exhaustive minimum set cover over digraph rows (subsets in increasing
// size, lexicographic within a size).
struct BruteCover {
  std::size_t size = 0;
  std::vector<std::size_t> guards;
};

inline BruteCover brute_min_cover(const edgeguard::VisibilityDigraph& dg) {
  const std::size_t n = dg.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      bool all = true;
      for (std::size_t e = 0; e < n && all; ++e) {
        bool seen = false;
        for (std::size_t g : idx) seen = seen || dg.sees(g, e);
        all = seen;
      }
      if (all) return {k, idx};
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

}  // namespace fixtures
