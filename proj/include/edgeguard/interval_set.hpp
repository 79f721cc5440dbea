#pragma once

#include <string>
#include <vector>

#include "edgeguard/geometry.hpp"

namespace edgeguard {

struct Interval {
  Scalar lo;
  Scalar hi;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Union of closed subintervals of [0,1], kept sorted, disjoint and with
// touching pieces merged. Degenerate pieces [t,t] are allowed.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet full();
  static IntervalSet single(Scalar lo, Scalar hi);

  // Adds [lo, hi] (clamped to [0,1]) and renormalizes.
  void add(Scalar lo, Scalar hi);
  void unite(const IntervalSet& other);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool is_full() const;
  bool contains(const Scalar& t) const;

  Scalar measure() const;
  // Closure of [0,1] minus this set, returned as closed intervals; points
  // where only a degenerate piece was present are not reported as gaps.
  IntervalSet complement() const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Interval> parts_;
};

}  // namespace edgeguard
