#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "edgeguard/geometry.hpp"
#include "edgeguard/interval_set.hpp"

namespace edgeguard {

// Edge-to-edge weak visibility.
//
// A point q sees edge g when some point of the closed edge g sees q. Only
// finitely many witnesses need testing: the endpoints of g and the points
// where g meets a line through q and a polygon vertex.
//
// Along an edge e the status of "q sees g" can only change where e crosses a
// line through two polygon vertices. The engine evaluates the status at every
// such critical parameter and at one midpoint per gap between consecutive
// critical parameters, so results are exact.
class VisibilityEngine {
 public:
  explicit VisibilityEngine(const Polygon& poly);

  const Polygon& polygon() const { return poly_; }

  // Sorted, distinct, starting at 0 and ending at 1.
  const std::vector<Scalar>& critical_parameters(std::size_t e) const;

  // `hint`, when given, is tried first and replaced by the witness found.
  bool point_sees_edge(const Point& q, std::size_t g,
                       std::optional<Point>* hint = nullptr) const;

  IntervalSet visible_portion(std::size_t g, std::size_t e) const;

  // Same as visible_portion with the given extra parameters added to the
  // evaluation grid. Used to check the critical set is sufficient.
  IntervalSet visible_portion_refined(std::size_t g, std::size_t e,
                                      const std::vector<Scalar>& extra) const;

  bool fully_sees(std::size_t g, std::size_t e) const;

 private:
  struct Samples {
    std::vector<Scalar> params;  // critical at even index, gap midpoint at odd
    std::vector<Point> points;
    std::vector<std::size_t> probe_order;
  };

  const Samples& samples(std::size_t e) const;
  static Samples make_samples(const Polygon& poly, std::size_t e,
                              std::vector<Scalar> critical);
  IntervalSet assemble(std::size_t g, const Samples& s) const;

  const Polygon& poly_;
  std::vector<std::vector<Scalar>> critical_;
  mutable std::vector<std::optional<Samples>> samples_;
};

// Exact critical parameters of edge e: 0, 1 and every parameter in (0,1)
// where e meets a line through two distinct polygon vertices.
std::vector<Scalar> critical_parameters(const Polygon& poly, std::size_t e);

bool point_sees_edge(const Polygon& poly, const Point& q, std::size_t g);
// True iff the single point q sees every point of edge e.
bool point_sees_whole_edge(const Polygon& poly, const Point& q, std::size_t e);
IntervalSet visible_portion(const Polygon& poly, std::size_t g, std::size_t e);
bool fully_sees(const Polygon& poly, std::size_t g, std::size_t e);

// Relation "edge g fully sees edge e". The diagonal is always set (an edge
// covers itself when guarded), but degrees count other edges only: an edge
// seen by nothing but its two neighbours has in-degree 2, and the weak edges
// are those of in-degree exactly 3.
class VisibilityDigraph {
 public:
  VisibilityDigraph() = default;
  explicit VisibilityDigraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool sees(std::size_t g, std::size_t e) const { return adj_[g * n_ + e] != 0; }
  void set(std::size_t g, std::size_t e, bool v) { adj_[g * n_ + e] = v; }

  std::size_t in_degree(std::size_t e) const;
  std::size_t out_degree(std::size_t g) const;
  std::vector<std::size_t> in_degrees() const;

  // Row-major '0'/'1' string, adjacency[g * n + e].
  std::string bit_string() const;

  friend bool operator==(const VisibilityDigraph&, const VisibilityDigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> adj_;
};

VisibilityDigraph build_digraph(const Polygon& poly);

}  // namespace edgeguard
