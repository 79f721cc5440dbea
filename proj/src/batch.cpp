#include "edgeguard/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "edgeguard/error.hpp"
#include "edgeguard/guards.hpp"
#include "edgeguard/structure.hpp"

namespace edgeguard {

namespace {

std::vector<std::int64_t> int_list(const Json& j, const std::string& what) {
  std::vector<std::int64_t> out;
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ConfigError(what + ": expected integers");
      out.push_back(v.get<std::int64_t>());
    }
  } else if (j.is_object()) {
    if (!j.contains("from") || !j.contains("to") || !j["from"].is_number_integer() ||
        !j["to"].is_number_integer()) {
      throw ConfigError(what + ": range needs integer \"from\" and \"to\"");
    }
    const auto from = j["from"].get<std::int64_t>();
    const auto to = j["to"].get<std::int64_t>();
    std::int64_t step = 1;
    if (j.contains("step")) {
      if (!j["step"].is_number_integer() || j["step"].get<std::int64_t>() < 1) {
        throw ConfigError(what + ": \"step\" must be a positive integer");
      }
      step = j["step"].get<std::int64_t>();
    }
    for (auto v = from; v <= to; v += step) out.push_back(v);
  } else {
    throw ConfigError(what + ": expected a list or a range object");
  }
  if (out.empty()) throw ConfigError(what + ": empty");
  for (auto v : out) {
    if (v < 0) throw ConfigError(what + ": negative value");
  }
  return out;
}

bool family_is_seeded(Family f) {
  return f == Family::RandomSimple || f == Family::Convex || f == Family::Staircase;
}

std::string entry_id(Family f, std::size_t size, std::optional<std::uint64_t> seed) {
  const bool k = f == Family::Comb || f == Family::ArrowBundle;
  std::string id = std::string(to_string(f)) + (k ? "-k" : "-n") + std::to_string(size);
  if (seed) id += "-s" + std::to_string(*seed);
  return id;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::size_t BatchResult::failures() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const BatchRow& r) { return !r.error.empty(); }));
}

CorpusConfig parse_corpus_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "name" && key != "oracle_max" && key != "below_budget_share" &&
        key != "families") {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  CorpusConfig cfg;
  cfg.name = j.value("name", std::string("corpus"));
  if (j.contains("oracle_max")) {
    if (!j["oracle_max"].is_number_unsigned()) {
      throw ConfigError("oracle_max must be a non-negative integer");
    }
    cfg.oracle_max = j["oracle_max"].get<std::size_t>();
  }
  if (j.contains("below_budget_share")) {
    if (!j["below_budget_share"].is_number()) {
      throw ConfigError("below_budget_share must be a number");
    }
    cfg.below_budget_share = j["below_budget_share"].get<double>();
    if (cfg.below_budget_share < 0 || cfg.below_budget_share > 1) {
      throw ConfigError("below_budget_share must lie in [0, 1]");
    }
  }
  if (!j.contains("families") || !j["families"].is_array()) {
    throw ConfigError("config needs a \"families\" list");
  }
  for (const auto& fam : j["families"]) {
    if (!fam.is_object() || !fam.contains("family") || !fam["family"].is_string()) {
      throw ConfigError("each family entry needs a \"family\" name");
    }
    const std::string name = fam["family"].get<std::string>();
    const auto family = parse_family(name);
    if (!family) throw ConfigError("unknown family '" + name + "'");
    if (!fam.contains("sizes")) throw ConfigError(name + ": missing \"sizes\"");
    const auto sizes = int_list(fam["sizes"], name + " sizes");
    std::vector<std::optional<std::uint64_t>> seeds;
    if (family_is_seeded(*family)) {
      if (!fam.contains("seeds")) throw ConfigError(name + ": missing \"seeds\"");
      for (auto s : int_list(fam["seeds"], name + " seeds")) {
        seeds.push_back(static_cast<std::uint64_t>(s));
      }
    } else {
      if (fam.contains("seeds")) throw ConfigError(name + ": family takes no seeds");
      seeds.push_back(std::nullopt);
    }
    std::int64_t bbox = 0;
    if (fam.contains("bbox")) {
      if (!fam["bbox"].is_number_integer()) throw ConfigError(name + ": bad bbox");
      bbox = fam["bbox"].get<std::int64_t>();
    }
    for (auto size : sizes) {
      for (const auto& seed : seeds) {
        CorpusEntry e;
        e.spec.family = *family;
        e.spec.size = static_cast<std::size_t>(size);
        e.spec.seed = seed.value_or(0);
        e.spec.bbox = bbox;
        e.seeded = seed.has_value();
        e.id = entry_id(*family, e.spec.size, seed);
        cfg.entries.push_back(std::move(e));
      }
    }
  }
  return cfg;
}

CorpusConfig read_corpus_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus_config(ss.str());
}

BatchRow run_entry(const CorpusEntry& entry, std::size_t oracle_max, bool timing) {
  BatchRow row;
  row.id = entry.id;
  row.family = to_string(entry.spec.family);
  if (entry.seeded) row.seed = entry.spec.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Polygon poly = generate(entry.spec);
    const Analysis a = analyze(poly);
    const GuardPlan plan = place_guards(a);
    const std::vector<std::size_t> guards = plan.guard_edges();

    row.n = poly.size();
    for (const auto& g : a.groups) {
      row.weak_edges += g.edges.size();
      row.weak_group_sizes.push_back(g.edges.size());
    }
    row.weak_groups = a.groups.size();
    row.backbone = true;
    for (std::size_t e = 0; e < row.n; ++e) {
      const std::size_t nx = poly.next(e);
      row.backbone = row.backbone && a.dg.sees(e, e) && a.dg.sees(e, nx) && a.dg.sees(nx, e);
    }
    const auto degrees = a.dg.in_degrees();
    row.min_in_degree = *std::min_element(degrees.begin(), degrees.end());
    for (const auto& b : a.bottlenecks) {
      (b.kind == BottleneckKind::Normal ? row.normal_bottlenecks : row.shallow_bottlenecks)++;
    }
    row.guards_used = guards.size();
    row.budget = plan.budget;
    row.within_bound = plan.verdict == Verdict::WithinBound;
    row.four_r_ok = std::all_of(plan.four_r_trace.begin(), plan.four_r_trace.end(),
                                [](const FourRStep& s) { return s.meets_4r; });
    row.whole_edge_covered = verify_edge_coverage(a.dg, guards).empty();
    row.pointwise_covered = verify_boundary_pointwise(poly, guards).boundary_fully_covered;
    if (row.n <= oracle_max) {
      if (auto best = min_guard_set(a.dg, row.n)) row.optimal_guards = best->size;
    }
    row.findings = run_monitors(a, plan);
    row.findings_count = row.findings.size();
  } catch (const DefectError&) {
    throw;
  } catch (const Error& e) {
    row.error = e.what();
  }
  if (timing) {
    row.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return row;
}

BatchResult run_batch(const CorpusConfig& cfg, const BatchOptions& opt) {
  BatchResult r;
  r.name = cfg.name;
  const std::size_t oracle_max = opt.oracle_max.value_or(cfg.oracle_max);
  const std::size_t total = cfg.entries.size();
  r.rows.resize(total);
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, total));
  if (jobs == 1) {
    for (std::size_t i = 0; i < total; ++i) {
      r.rows[i] = run_entry(cfg.entries[i], oracle_max, opt.timing);
    }
    return r;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < total; i = next++) {
          r.rows[i] = run_entry(cfg.entries[i], oracle_max, opt.timing);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next = total;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return r;
}

std::string batch_csv(const BatchResult& r) {
  std::string out = std::string(kBatchCsvHeader) + "\n";
  for (const auto& row : r.rows) {
    if (!row.error.empty()) continue;
    std::string elapsed;
    if (row.elapsed_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *row.elapsed_ms);
      elapsed = buf;
    }
    out += row.id + "," + row.family + "," + (row.seed ? std::to_string(*row.seed) : "") +
           "," + std::to_string(row.n) + "," + std::to_string(row.weak_edges) + "," +
           std::to_string(row.weak_groups) + "," + std::to_string(row.normal_bottlenecks) +
           "," + std::to_string(row.shallow_bottlenecks) + "," +
           std::to_string(row.guards_used) + "," + std::to_string(row.budget) + "," +
           (row.optimal_guards ? std::to_string(*row.optimal_guards) : "") + "," +
           yes_no(row.within_bound) + "," + yes_no(row.four_r_ok) + "," +
           std::to_string(row.findings_count) + "," + elapsed + "\n";
  }
  return out;
}

Json batch_summary_json(const BatchResult& r) {
  std::size_t ok = 0;
  std::size_t within = 0;
  std::size_t covered = 0;
  std::size_t compared = 0;
  std::size_t above_optimum = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> below;  // family -> (below, all)
  std::map<std::string, std::size_t> by_kind;
  Json findings = Json::array();
  Json failures = Json::array();
  for (const auto& row : r.rows) {
    if (!row.error.empty()) {
      failures.push_back({{"polygon_id", row.id}, {"error", row.error}});
      continue;
    }
    ++ok;
    within += row.within_bound;
    covered += row.whole_edge_covered && row.pointwise_covered;
    auto& b = below[row.family];
    b.first += row.guards_used < row.budget;
    b.second += 1;
    if (row.optimal_guards) {
      ++compared;
      above_optimum += row.guards_used > *row.optimal_guards;
    }
    for (const auto& f : row.findings) {
      by_kind[to_string(f.kind)]++;
      Json verts = Json::array();
      for (const auto& p : f.polygon) verts.push_back(point_json(p));
      findings.push_back({{"polygon_id", row.id},
                          {"kind", to_string(f.kind)},
                          {"detail", f.detail},
                          {"vertices", verts}});
    }
  }
  Json shares = Json::object();
  for (const auto& [fam, c] : below) {
    shares[fam] = {{"strictly_below_budget", c.first}, {"polygons", c.second}};
  }
  Json kinds = Json::object();
  for (const auto& [k, c] : by_kind) kinds[k] = c;
  return {{"schema_version", kSchemaVersion},
          {"name", r.name},
          {"polygons", ok},
          {"failures", failures},
          {"within_bound", within},
          {"fully_covered", covered},
          {"oracle_compared", compared},
          {"guards_above_optimum", above_optimum},
          {"below_budget", shares},
          {"findings_by_kind", kinds},
          {"findings", findings}};
}

}  // namespace edgeguard
