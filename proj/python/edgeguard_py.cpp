#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "edgeguard/error.hpp"
#include "edgeguard/generators.hpp"
#include "edgeguard/guards.hpp"
#include "edgeguard/polyfile.hpp"
#include "edgeguard/render.hpp"
#include "edgeguard/report.hpp"
#include "edgeguard/structure.hpp"
#include "edgeguard/verify_oracle.hpp"
#include "edgeguard/visibility.hpp"

namespace py = pybind11;
namespace eg = edgeguard;

namespace {

// int, fractions.Fraction, or a string ("-2.5", "3/4"). Floats are refused
// so no rounded value reaches the predicates.
eg::Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    throw py::type_error("float coordinates are not accepted; use int, Fraction or str");
  }
  if (py::isinstance<py::str>(h)) {
    const auto s = h.cast<std::string>();
    if (s.find('/') == std::string::npos) {
      try {
        return eg::parse_decimal(s);
      } catch (const std::invalid_argument& e) {
        throw py::value_error(e.what());
      }
    }
    eg::Scalar v;
    if (v.set_str(s, 10) != 0 || v.get_den() == 0) throw py::value_error("bad rational '" + s + "'");
    v.canonicalize();
    return v;
  }
  py::object frac = py::module_::import("fractions").attr("Fraction")(h);
  eg::Scalar v(py::str(frac.attr("numerator")).cast<std::string>() + "/" +
               py::str(frac.attr("denominator")).cast<std::string>());
  v.canonicalize();
  return v;
}

py::object to_fraction(const eg::Scalar& v) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::str(v.get_str()));
}

eg::Point to_point(const py::handle& h) {
  auto seq = h.cast<py::sequence>();
  if (py::len(seq) != 2) throw py::value_error("a point has exactly two coordinates");
  return {to_scalar(seq[0]), to_scalar(seq[1])};
}

py::tuple from_point(const eg::Point& p) {
  return py::make_tuple(to_fraction(p.x), to_fraction(p.y));
}

py::object to_python(const eg::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

eg::Polygon make_polygon(const py::iterable& vertices) {
  std::vector<eg::Point> pts;
  for (auto h : vertices) pts.push_back(to_point(h));
  return eg::Polygon::validate(std::move(pts));
}

py::list intervals(const eg::IntervalSet& s) {
  py::list out;
  for (const auto& iv : s.parts()) out.append(py::make_tuple(to_fraction(iv.lo), to_fraction(iv.hi)));
  return out;
}

}  // namespace

PYBIND11_MODULE(edgeguard, m) {
  m.doc() = "Edge guards for simple polygons, computed in exact arithmetic.";

  // Translators run newest first, so the base class is registered first.
  auto error = py::register_exception<eg::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<eg::ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<eg::InvalidEdgeId>(m, "InvalidEdgeId", error.ptr());
  py::register_exception<eg::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<eg::DefectError>(m, "DefectError", error.ptr());

  py::class_<eg::Polygon>(m, "Polygon")
      .def(py::init(&make_polygon), py::arg("vertices"),
           "Validate a vertex list; clockwise input is reversed.")
      .def_property_readonly("n", &eg::Polygon::size)
      .def_property_readonly("vertices",
                             [](const eg::Polygon& p) {
                               py::list out;
                               for (const auto& v : p.vertices()) out.append(from_point(v));
                               return out;
                             })
      .def_property_readonly("was_reversed", &eg::Polygon::was_reversed)
      .def("__len__", &eg::Polygon::size)
      .def("__repr__", [](const eg::Polygon& p) {
        return "<edgeguard.Polygon n=" + std::to_string(p.size()) + ">";
      });

  m.def("parse_polyfile",
        [](const std::string& text) {
          return eg::Polygon::validate(eg::parse_polyfile_string(text));
        },
        py::arg("text"));
  m.def("write_polyfile", [](const eg::Polygon& p) { return eg::write_polyfile(p); },
        py::arg("polygon"));
  m.def("generate",
        [](const std::string& family, std::size_t size, std::uint64_t seed, std::int64_t bbox) {
          auto f = eg::parse_family(family);
          if (!f) throw py::value_error("unknown family '" + family + "'");
          return eg::generate({*f, size, seed, bbox});
        },
        py::arg("family"), py::arg("size"), py::arg("seed") = 1, py::arg("bbox") = 0);

  m.def("sees",
        [](const eg::Polygon& poly, const py::handle& p, const py::handle& q) {
          return eg::sees(poly, to_point(p), to_point(q));
        },
        py::arg("polygon"), py::arg("p"), py::arg("q"));
  m.def("visible_portion",
        [](const eg::Polygon& poly, std::size_t g, std::size_t e) {
          return intervals(eg::visible_portion(poly, g, e));
        },
        py::arg("polygon"), py::arg("g"), py::arg("e"));
  m.def("fully_sees",
        [](const eg::Polygon& poly, std::size_t g, std::size_t e) {
          return eg::fully_sees(poly, g, e);
        },
        py::arg("polygon"), py::arg("g"), py::arg("e"));
  m.def("digraph",
        [](const eg::Polygon& poly) {
          const auto dg = eg::build_digraph(poly);
          std::vector<std::vector<bool>> rows(dg.size(), std::vector<bool>(dg.size()));
          for (std::size_t g = 0; g < dg.size(); ++g) {
            for (std::size_t e = 0; e < dg.size(); ++e) rows[g][e] = dg.sees(g, e);
          }
          return rows;
        },
        py::arg("polygon"), "rows[g][e] is True when edge g fully sees edge e");

  m.def("analyze", [](const eg::Polygon& poly) { return to_python(eg::analysis_report(eg::analyze(poly))); },
        py::arg("polygon"), "Structure report as a dict (same layout as the CLI).");
  m.def("place_guards",
        [](const eg::Polygon& poly, bool skip_weak_preprocess, bool no_rescue,
           std::size_t exact_threshold) {
          eg::GuardOptions opt{skip_weak_preprocess, no_rescue, exact_threshold};
          const eg::Analysis a = eg::analyze(poly);
          return to_python(eg::guards_report(a, eg::place_guards(a, opt)));
        },
        py::arg("polygon"), py::arg("skip_weak_preprocess") = false, py::arg("no_rescue") = false,
        py::arg("exact_threshold") = 20, "Guard report as a dict (same layout as the CLI).");
  m.def("verify",
        [](const eg::Polygon& poly, const std::vector<std::size_t>& guards) {
          for (std::size_t g : guards) poly.check_edge(g);
          return to_python(eg::verify_report(poly, eg::build_digraph(poly), guards));
        },
        py::arg("polygon"), py::arg("guards"));
  m.def("min_guard_set",
        [](const eg::Polygon& poly, std::optional<std::size_t> limit) -> py::object {
          const auto best = eg::min_guard_set(eg::build_digraph(poly), limit.value_or(poly.size()));
          if (!best) return py::none();
          return py::make_tuple(best->size, best->guards);
        },
        py::arg("polygon"), py::arg("limit") = py::none(),
        "(size, witness) of a minimum cover, or None if none fits in limit.");
  m.def("render_svg",
        [](const eg::Polygon& poly, const std::vector<std::string>& show) {
          eg::RenderOptions opt;
          for (const auto& s : show) opt.layers.push_back(eg::parse_layer(s));
          const eg::Analysis a = eg::analyze(poly);
          std::optional<eg::GuardPlan> plan;
          for (auto l : opt.layers) {
            if (l == eg::Layer::Guards && !plan) plan = eg::place_guards(a);
          }
          return eg::render_svg(a, plan ? &*plan : nullptr, opt);
        },
        py::arg("polygon"), py::arg("show") = std::vector<std::string>{});
  m.attr("schema_version") = eg::kSchemaVersion;
}
