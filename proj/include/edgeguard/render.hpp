#pragma once

#include <string>
#include <vector>

#include "edgeguard/guards.hpp"
#include "edgeguard/structure.hpp"

namespace edgeguard {

enum class Layer { Digraph, Weak, Bottlenecks, Guards };

const char* to_string(Layer layer);
// Accepts "digraph", "weak", "bottlenecks", "guards". Throws Error otherwise.
Layer parse_layer(const std::string& name);

struct RenderOptions {
  std::vector<Layer> layers;
  double size = 640;   // longer side of the drawing area, in px
  double margin = 24;
};

// Outline solid; weak edges get slash ticks; normal chords dashed, shallow
// chords dotted; guard edges stroked thick; digraph arcs join edge
// midpoints (one-way arcs carry an arrowhead). `plan` is only read for the
// guards layer and may be null otherwise.
std::string render_svg(const Analysis& a, const GuardPlan* plan, const RenderOptions& opt);

}  // namespace edgeguard
