#pragma once

#include <cstddef>
#include <vector>

#include "edgeguard/structure.hpp"
#include "edgeguard/visibility.hpp"

namespace edgeguard {

enum class GuardStep { WeakGroup, Bottleneck, Remainder, Fallback };
enum class Verdict { WithinBound, ExceedsBound };
enum class RescuePath { None, Greedy, Exact };

const char* to_string(GuardStep s);
const char* to_string(Verdict v);
const char* to_string(RescuePath r);

// Edges fully seen by g, g included.
std::vector<std::size_t> cover_of(const VisibilityDigraph& dg, std::size_t g);

struct GuardPlacement {
  std::size_t edge = 0;
  GuardStep step = GuardStep::Remainder;
  std::size_t marginal = 0;  // edges newly covered when placed
};

class CoverageState {
 public:
  explicit CoverageState(std::size_t n) : marks_(n) {}

  std::size_t size() const { return marks_.size(); }
  bool covered(std::size_t e) const { return !marks_[e].empty(); }
  std::size_t uncovered_count() const;
  // Guards that cover e, in placement order.
  const std::vector<std::size_t>& marks(std::size_t e) const { return marks_[e]; }

  // Number of currently uncovered edges g would cover.
  std::size_t gain(const VisibilityDigraph& dg, std::size_t g) const;
  // Marks everything g covers and returns the gain.
  std::size_t place(const VisibilityDigraph& dg, std::size_t g);

 private:
  std::vector<std::vector<std::size_t>> marks_;
};

struct FourRStep {
  std::size_t guards = 0;    // r
  std::size_t covered = 0;   // edges covered by the first r guards
  bool meets_4r = false;     // covered >= min(4r, N)
  bool low_marginal = false; // r-th guard added < 4 edges while >= 4 were open
};

struct GuardPlan {
  std::vector<GuardPlacement> guards;
  std::vector<std::size_t> covered;
  std::size_t budget = 0;
  Verdict verdict = Verdict::WithinBound;
  std::vector<FourRStep> four_r_trace;
  RescuePath rescue_path = RescuePath::None;
  // Weak groups (indices) no single candidate could cover in step 1.
  std::vector<std::size_t> flagged_groups;

  std::vector<std::size_t> guard_edges() const;
};

struct GuardOptions {
  bool skip_weak_preprocess = false;
  bool no_rescue = false;
  std::size_t exact_threshold = 20;
};

std::size_t guard_budget(std::size_t n);  // ceil(n / 4)

// Step 1: one guard per weak group that still has an uncovered member,
// chosen among the members and the two flanking edges.
std::vector<GuardPlacement> step1_weak_groups(const VisibilityDigraph& dg,
                                              const std::vector<WeakGroup>& groups,
                                              CoverageState& st,
                                              std::vector<std::size_t>* flagged = nullptr);

// Step 2: normal bottlenecks, smaller incident face first. Each guard is
// one of the two edges at the dominating vertex or the dominated edge.
std::vector<GuardPlacement> step2_bottlenecks(const Polygon& poly,
                                              const VisibilityDigraph& dg,
                                              const std::vector<Bottleneck>& normals,
                                              const EdgeSetPartition& part,
                                              CoverageState& st);

// Step 3: greedy cover of whatever is left.
std::vector<GuardPlacement> step3_remainder(const VisibilityDigraph& dg,
                                            CoverageState& st);

// Drops guards, latest first, whose removal keeps every edge covered, and
// recomputes coverage, marginals and the 4r trace.
GuardPlan prune_redundant(const VisibilityDigraph& dg, const GuardPlan& plan);

GuardPlan place_guards(const Analysis& a, const GuardOptions& opt = {});
GuardPlan place_guards(const Polygon& poly, const GuardOptions& opt = {});

}  // namespace edgeguard
