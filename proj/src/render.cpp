#include "edgeguard/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "edgeguard/error.hpp"

namespace edgeguard {

const char* to_string(Layer layer) {
  switch (layer) {
    case Layer::Digraph:
      return "digraph";
    case Layer::Weak:
      return "weak";
    case Layer::Bottlenecks:
      return "bottlenecks";
    case Layer::Guards:
      return "guards";
  }
  return "?";
}

Layer parse_layer(const std::string& name) {
  for (Layer l : {Layer::Digraph, Layer::Weak, Layer::Bottlenecks, Layer::Guards}) {
    if (name == to_string(l)) return l;
  }
  throw Error("unknown layer '" + name + "' (expected digraph, weak, bottlenecks, guards)");
}

namespace {

struct XY {
  double x;
  double y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

class Canvas {
 public:
  Canvas(const Polygon& poly, const RenderOptions& opt) : margin_(opt.margin) {
    const auto& vs = poly.vertices();
    minx_ = maxx_ = vs[0].x.get_d();
    miny_ = maxy_ = vs[0].y.get_d();
    for (const auto& p : vs) {
      minx_ = std::min(minx_, p.x.get_d());
      maxx_ = std::max(maxx_, p.x.get_d());
      miny_ = std::min(miny_, p.y.get_d());
      maxy_ = std::max(maxy_, p.y.get_d());
    }
    const double span = std::max(maxx_ - minx_, maxy_ - miny_);
    scale_ = opt.size / (span > 0 ? span : 1);
    width_ = (maxx_ - minx_) * scale_ + 2 * margin_;
    height_ = (maxy_ - miny_) * scale_ + 2 * margin_;
  }

  XY map(const Point& p) const {
    return {margin_ + (p.x.get_d() - minx_) * scale_, margin_ + (maxy_ - p.y.get_d()) * scale_};
  }

  double width() const { return width_; }
  double height() const { return height_; }

 private:
  double margin_;
  double minx_, maxx_, miny_, maxy_;
  double scale_ = 1;
  double width_ = 0;
  double height_ = 0;
};

std::string line(XY a, XY b, const std::string& attrs) {
  return "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
         "\" y2=\"" + num(b.y) + "\" " + attrs + "/>\n";
}

XY mid(XY a, XY b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

void draw_digraph(std::string& out, const Analysis& a, const Canvas& c) {
  const Polygon& poly = a.poly;
  const std::size_t n = poly.size();
  std::vector<XY> m(n);
  for (std::size_t e = 0; e < n; ++e) m[e] = mid(c.map(poly.source(e)), c.map(poly.target(e)));
  out += "<g class=\"digraph\" stroke=\"#7a8da8\" stroke-width=\"0.8\">\n";
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t e = g + 1; e < n; ++e) {
      if (e == poly.next(g) || g == poly.next(e)) continue;
      const bool fwd = a.dg.sees(g, e);
      const bool back = a.dg.sees(e, g);
      if (fwd && back) {
        out += line(m[g], m[e], "class=\"arc mutual\"");
      } else if (fwd) {
        out += line(m[g], m[e], "class=\"arc oneway\" marker-end=\"url(#arrow)\"");
      } else if (back) {
        out += line(m[e], m[g], "class=\"arc oneway\" marker-end=\"url(#arrow)\"");
      }
    }
  }
  out += "</g>\n<g class=\"labels\" font-family=\"monospace\" font-size=\"10\" fill=\"#333\">\n";
  for (std::size_t e = 0; e < n; ++e) {
    out += "<text x=\"" + num(m[e].x + 3) + "\" y=\"" + num(m[e].y - 3) + "\">" +
           std::to_string(e) + ":" + std::to_string(a.dg.in_degree(e)) + "</text>\n";
  }
  out += "</g>\n";
}

void draw_weak(std::string& out, const Analysis& a, const Canvas& c) {
  out += "<g class=\"weak\" stroke=\"#c0392b\" stroke-width=\"1.5\">\n";
  for (const auto& grp : a.groups) {
    for (std::size_t e : grp.edges) {
      const XY p = c.map(a.poly.source(e));
      const XY q = c.map(a.poly.target(e));
      double ux = q.x - p.x;
      double uy = q.y - p.y;
      const double len = std::hypot(ux, uy);
      ux /= len;
      uy /= len;
      const XY m = mid(p, q);
      const double tx = (ux - uy) * 5 / std::sqrt(2.0);
      const double ty = (uy + ux) * 5 / std::sqrt(2.0);
      out += "<g class=\"weak-edge\" data-edge=\"" + std::to_string(e) + "\">\n";
      for (double off : {-3.0, 3.0}) {
        const XY cc{m.x + off * ux, m.y + off * uy};
        out += line({cc.x - tx, cc.y - ty}, {cc.x + tx, cc.y + ty}, "class=\"tick\"");
      }
      out += "</g>\n";
    }
  }
  out += "</g>\n";
}

void draw_bottlenecks(std::string& out, const Analysis& a, const Canvas& c) {
  out += "<g class=\"bottlenecks\" stroke=\"#1f6f3f\" stroke-width=\"1.2\">\n";
  for (const auto& b : a.bottlenecks) {
    const Segment s = b.chord(a.poly);
    const std::string tag = "data-edge=\"" + std::to_string(b.edge) + "\" data-vertex=\"" +
                            std::to_string(b.vertex) + "\"";
    if (b.kind == BottleneckKind::Normal) {
      out += line(c.map(s.a), c.map(s.b),
                  "class=\"chord normal\" stroke-dasharray=\"6 4\" " + tag);
    } else {
      out += line(c.map(s.a), c.map(s.b),
                  "class=\"chord shallow\" stroke-dasharray=\"1 3\" stroke-linecap=\"round\" " +
                      tag);
    }
  }
  out += "</g>\n";
}

void draw_guards(std::string& out, const Analysis& a, const GuardPlan& plan, const Canvas& c) {
  out += "<g class=\"guards\" stroke=\"#1a4fa0\" stroke-width=\"5\" stroke-linecap=\"round\">\n";
  for (const auto& g : plan.guards) {
    out += line(c.map(a.poly.source(g.edge)), c.map(a.poly.target(g.edge)),
                "class=\"guard\" data-edge=\"" + std::to_string(g.edge) + "\" data-step=\"" +
                    to_string(g.step) + "\"");
  }
  out += "</g>\n";
}

}  // namespace

std::string render_svg(const Analysis& a, const GuardPlan* plan, const RenderOptions& opt) {
  const Canvas c(a.poly, opt);
  auto has = [&](Layer l) {
    return std::find(opt.layers.begin(), opt.layers.end(), l) != opt.layers.end();
  };
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(c.width()) +
         "\" height=\"" + num(c.height()) + "\" viewBox=\"0 0 " + num(c.width()) + " " +
         num(c.height()) + "\">\n";
  out +=
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
      "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" "
      "fill=\"#7a8da8\"/></marker></defs>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<polygon class=\"outline\" fill=\"#f4f4f0\" stroke=\"black\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < a.poly.size(); ++i) {
    const XY p = c.map(a.poly.vertex(i));
    if (i) out += " ";
    out += num(p.x) + "," + num(p.y);
  }
  out += "\"/>\n";
  if (has(Layer::Digraph)) draw_digraph(out, a, c);
  if (has(Layer::Bottlenecks)) draw_bottlenecks(out, a, c);
  if (has(Layer::Guards)) {
    if (!plan) throw Error("render_svg: guards layer needs a plan");
    draw_guards(out, a, *plan, c);
  }
  if (has(Layer::Weak)) draw_weak(out, a, c);
  out += "</svg>\n";
  return out;
}

}  // namespace edgeguard
