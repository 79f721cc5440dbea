#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edgeguard/error.hpp"
#include "edgeguard/generators.hpp"
#include "edgeguard/report.hpp"
#include "edgeguard/verify_oracle.hpp"

namespace edgeguard {

// Corpus config (JSON):
//
//   {
//     "name": "corpus",
//     "oracle_max": 16,
//     "below_budget_share": 0.7,
//     "families": [
//       {"family": "random", "sizes": {"from": 6, "to": 30},
//        "seeds": {"from": 1, "to": 14}},
//       {"family": "comb", "sizes": [1, 2, 3]}
//     ]
//   }
//
// "sizes" and "seeds" are either integer lists or {"from", "to", "step"}
// ranges (inclusive). Seeds are required for random, convex and staircase
// and rejected for comb and arrow-bundle. Polygons are enumerated family by
// family, then size, then seed.

struct CorpusEntry {
  std::string id;  // e.g. "random-n12-s3", "comb-k2"
  GenSpec spec;
  bool seeded = true;
};

struct CorpusConfig {
  std::string name;
  std::size_t oracle_max = 16;
  double below_budget_share = 0.7;
  std::vector<CorpusEntry> entries;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

CorpusConfig parse_corpus_config(const std::string& json_text);
CorpusConfig read_corpus_config(const std::string& path);

struct BatchOptions {
  std::optional<std::size_t> oracle_max;  // overrides the config when set
  bool timing = false;                    // fill elapsed_ms (not reproducible)
  std::size_t jobs = 1;
};

struct BatchRow {
  std::string id;
  std::string family;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  std::size_t weak_edges = 0;
  std::size_t weak_groups = 0;
  std::size_t normal_bottlenecks = 0;
  std::size_t shallow_bottlenecks = 0;
  std::size_t guards_used = 0;
  std::size_t budget = 0;
  std::optional<std::size_t> optimal_guards;
  bool within_bound = false;
  bool four_r_ok = false;
  std::size_t findings_count = 0;
  std::optional<double> elapsed_ms;

  // Not part of the CSV.
  bool whole_edge_covered = false;
  bool pointwise_covered = false;
  bool backbone = false;  // every edge sees itself and both neighbours and back
  std::size_t min_in_degree = 0;
  std::vector<std::size_t> weak_group_sizes;
  std::vector<ConjectureFinding> findings;
  std::string error;  // generation or validation failure; other fields unset
};

struct BatchResult {
  std::string name;
  std::vector<BatchRow> rows;  // config order
  std::size_t failures() const;
};

BatchRow run_entry(const CorpusEntry& entry, std::size_t oracle_max, bool timing);
BatchResult run_batch(const CorpusConfig& cfg, const BatchOptions& opt = {});

inline constexpr const char* kBatchCsvHeader =
    "polygon_id,family,seed,n,weak_edges,weak_groups,normal_bottlenecks,"
    "shallow_bottlenecks,guards_used,budget_ceil_n_4,optimal_guards,within_bound,"
    "four_r_ok,findings_count,elapsed_ms";

// Header plus one row per successfully generated polygon.
std::string batch_csv(const BatchResult& r);

// Totals, per-kind finding counts, archived findings with their polygons,
// and failures.
Json batch_summary_json(const BatchResult& r);

}  // namespace edgeguard
