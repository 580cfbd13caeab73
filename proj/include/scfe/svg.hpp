#pragma once

#include <string>

#include "scfe/geometry.hpp"
#include "scfe/signed_graph.hpp"

namespace scfe {

// Vertices on a circle (angle 0 at the top, increasing clockwise on screen), solid
// chords for positive edges, dashed chords for negative ones.
std::string render_svg(const SignedGraph& g, const Drawing& d);

// One concentric annular arc per vertex; filled end caps are closed ends.
std::string render_svg(const ArcModel& m);

}  // namespace scfe
