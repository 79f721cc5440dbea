#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgeguard/batch.hpp"
#include "edgeguard/error.hpp"
#include "edgeguard/generators.hpp"
#include "edgeguard/guards.hpp"
#include "edgeguard/polyfile.hpp"
#include "edgeguard/render.hpp"
#include "edgeguard/report.hpp"
#include "edgeguard/structure.hpp"
#include "edgeguard/verify_oracle.hpp"

namespace eg = edgeguard;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw eg::Error("cannot write " + path);
}

std::vector<std::size_t> parse_id_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw eg::Error("empty guard id in '" + text + "'");
    item = item.substr(b, e - b + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18) {
      throw eg::Error("bad guard id '" + item + "'");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

std::vector<eg::Layer> parse_layers(const std::vector<std::string>& items) {
  std::vector<eg::Layer> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string name; std::getline(ss, name, ',');) out.push_back(eg::parse_layer(name));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge guards for simple polygons, computed in exact arithmetic."};
  app.require_subcommand(1);

  std::string input;

  auto* analyze = app.add_subcommand("analyze", "Digraph, weak edges, bottlenecks and faces");
  analyze->add_option("input", input, "Polygon file")->required();

  eg::GuardOptions gopt;
  auto* guards = app.add_subcommand("guards", "Place guards and verify the plan");
  guards->add_option("input", input, "Polygon file")->required();
  guards->add_flag("--skip-weak-preprocess", gopt.skip_weak_preprocess,
                   "Do not give weak groups their own guards first");
  guards->add_flag("--no-rescue", gopt.no_rescue,
                   "Report an over-budget plan instead of retrying");
  guards->add_option("--exact-threshold", gopt.exact_threshold,
                     "Largest N for the exact fallback")
      ->capture_default_str();

  std::string guard_list;
  auto* verify = app.add_subcommand("verify", "Check a given guard set");
  verify->add_option("input", input, "Polygon file")->required();
  verify->add_option("--guards", guard_list, "Comma-separated edge ids")->required();

  std::size_t limit = 0;
  auto* oracle = app.add_subcommand("oracle", "Minimum guard count by exhaustive search");
  oracle->add_option("input", input, "Polygon file")->required();
  oracle->add_option("--limit", limit, "Largest guard count to try (default N)");

  std::string family;
  std::size_t size = 0;
  eg::GenSpec spec;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a polygon file");
  gen->add_option("family", family, "random, convex, comb, arrow-bundle or staircase")
      ->required();
  gen->add_option("size", size, "n (random, convex, staircase) or k (comb, arrow-bundle)")
      ->required();
  gen->add_option("--seed", spec.seed, "Seed for randomized families")->capture_default_str();
  gen->add_option("--bbox", spec.bbox, "Bounding box side (0 = family default)");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> show;
  std::string svg_path;
  auto* render = app.add_subcommand("render", "Draw the polygon as SVG");
  render->add_option("input", input, "Polygon file")->required();
  render->add_option("--show", show, "digraph, weak, bottlenecks, guards (comma list)");
  render->add_option("--out", svg_path, "Output SVG file (default stdout)");

  std::string config_path;
  std::string csv_path;
  std::string summary_path;
  eg::BatchOptions bopt;
  std::size_t oracle_max = 0;
  auto* batch = app.add_subcommand("batch", "Run a corpus and write one CSV row per polygon");
  batch->add_option("config", config_path, "Corpus config (JSON)")->required();
  batch->add_option("--out", csv_path, "CSV output file (default stdout)");
  batch->add_option("--summary", summary_path, "Summary and findings archive (JSON)");
  auto* om = batch->add_option("--oracle-max", oracle_max,
                               "Run the exact oracle up to this N (overrides config)");
  batch->add_flag("--timing", bopt.timing, "Fill elapsed_ms (output no longer reproducible)");
  batch->add_option("--jobs", bopt.jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) {
      const eg::Analysis a = eg::analyze(eg::read_polygon_file(input));
      std::cout << eg::dump(eg::analysis_report(a));
    } else if (*guards) {
      const eg::Analysis a = eg::analyze(eg::read_polygon_file(input));
      const eg::GuardPlan plan = eg::place_guards(a, gopt);
      std::cout << eg::dump(eg::guards_report(a, plan));
    } else if (*verify) {
      const eg::Polygon poly = eg::read_polygon_file(input);
      const auto ids = parse_id_list(guard_list);
      for (std::size_t g : ids) poly.check_edge(g);
      std::cout << eg::dump(eg::verify_report(poly, eg::build_digraph(poly), ids));
    } else if (*oracle) {
      const eg::Polygon poly = eg::read_polygon_file(input);
      if (oracle->count("--limit") && limit < 1) throw eg::Error("--limit must be >= 1");
      const std::size_t l = oracle->count("--limit") ? limit : poly.size();
      const auto best = eg::min_guard_set(eg::build_digraph(poly), l);
      std::cout << eg::dump(eg::oracle_report(poly, best, l));
    } else if (*gen) {
      const auto f = eg::parse_family(family);
      if (!f) throw eg::Error("unknown family '" + family + "'");
      spec.family = *f;
      spec.size = size;
      write_text(out_path, eg::write_polyfile(eg::generate(spec)));
    } else if (*render) {
      eg::RenderOptions ropt;
      ropt.layers = parse_layers(show);
      const eg::Analysis a = eg::analyze(eg::read_polygon_file(input));
      std::optional<eg::GuardPlan> plan;
      for (auto l : ropt.layers) {
        if (l == eg::Layer::Guards && !plan) plan = eg::place_guards(a);
      }
      write_text(svg_path, eg::render_svg(a, plan ? &*plan : nullptr, ropt));
    } else if (*batch) {
      const eg::CorpusConfig cfg = eg::read_corpus_config(config_path);
      if (om->count()) bopt.oracle_max = oracle_max;
      const eg::BatchResult r = eg::run_batch(cfg, bopt);
      write_text(csv_path, eg::batch_csv(r));
      if (!summary_path.empty()) write_text(summary_path, eg::dump(eg::batch_summary_json(r)));
      std::map<std::string, std::size_t> kinds;
      for (const auto& row : r.rows) {
        for (const auto& f : row.findings) kinds[eg::to_string(f.kind)]++;
        if (!row.error.empty()) std::cerr << row.id << ": " << row.error << "\n";
      }
      for (const auto& [k, c] : kinds) std::cerr << "findings: " << k << " " << c << "\n";
      if (r.failures() > 0) {
        std::cerr << "error: " << r.failures() << " polygon(s) failed\n";
        return 1;
      }
    }
  } catch (const eg::DefectError& e) {
    std::cerr << "defect: " << e.what() << "\n";
    return 2;
  } catch (const eg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
