#include "edgeguard/interval_set.hpp"

#include <algorithm>

namespace edgeguard {

IntervalSet IntervalSet::full() { return single(0, 1); }

IntervalSet IntervalSet::single(Scalar lo, Scalar hi) {
  IntervalSet s;
  s.add(std::move(lo), std::move(hi));
  return s;
}

void IntervalSet::add(Scalar lo, Scalar hi) {
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  if (lo > hi) return;
  auto pos = std::lower_bound(
      parts_.begin(), parts_.end(), lo,
      [](const Interval& iv, const Scalar& v) { return iv.lo < v; });
  parts_.insert(pos, Interval{std::move(lo), std::move(hi)});

  std::vector<Interval> merged;
  merged.reserve(parts_.size());
  for (auto& iv : parts_) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
    } else {
      merged.push_back(std::move(iv));
    }
  }
  parts_ = std::move(merged);
}

void IntervalSet::unite(const IntervalSet& other) {
  for (const auto& iv : other.parts_) add(iv.lo, iv.hi);
}

bool IntervalSet::is_full() const {
  return parts_.size() == 1 && parts_[0].lo == 0 && parts_[0].hi == 1;
}

bool IntervalSet::contains(const Scalar& t) const {
  for (const auto& iv : parts_) {
    if (iv.lo <= t && t <= iv.hi) return true;
  }
  return false;
}

Scalar IntervalSet::measure() const {
  Scalar m = 0;
  for (const auto& iv : parts_) m += iv.hi - iv.lo;
  return m;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out;
  Scalar cursor = 0;
  for (const auto& iv : parts_) {
    if (cursor < iv.lo) out.add(cursor, iv.lo);
    cursor = iv.hi;
  }
  if (cursor < 1) out.add(cursor, 1);
  return out;
}

std::string IntervalSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ", ";
    s += "[" + parts_[i].lo.get_str() + ", " + parts_[i].hi.get_str() + "]";
  }
  return s + "}";
}

}  // namespace edgeguard
