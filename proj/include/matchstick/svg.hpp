#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchstick/geom.hpp"
#include "matchstick/plane_graph.hpp"

namespace matchstick {

// One circle per vertex, one segment per edge; 100 units per stick, 4-unit
// vertex radius.  Without coordinates a planar straight-line layout is used
// and the drawing is labeled "combinatorial only".
std::string render_svg(const PlaneGraph& g, const std::optional<std::vector<Vec2>>& coords);
void export_svg(const PlaneGraph& g, const std::optional<std::vector<Vec2>>& coords,
                const std::string& path);

}  // namespace matchstick
