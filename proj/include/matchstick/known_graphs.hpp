#pragma once

#include <string>
#include <vector>

#include "matchstick/geom.hpp"
#include "matchstick/plane_graph.hpp"

namespace matchstick {

// An edge drawn as a curve: the rotation slot at each endpoint follows the
// tangent direction toward `control` instead of the straight chord.
struct BentEdge {
    VertexId u;
    VertexId v;
    Vec2 control;
};

// Build a plane graph from a drawing: rotations are the counterclockwise
// angular orders (bent edges use their control-point tangents), the outer
// face is the unbounded one.
PlaneGraph plane_graph_from_drawing(const std::vector<Vec2>& coords,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges,
                                    const std::vector<BentEdge>& bends = {});

struct KnownGraph {
    std::string name;
    std::vector<Vec2> layout;  // schematic drawing, not unit-accurate
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<BentEdge> bends;
    // Vertex pair whose forced distance refutes (or anchors) the drawing.
    std::pair<VertexId, VertexId> focus{-1, -1};
    double focus_required = 1.0;

    PlaneGraph build() const { return plane_graph_from_drawing(layout, edges, bends); }
};

// The five deficiency-4 candidates with n <= 16 that survive every
// combinatorial filter yet admit no unit-distance drawing.
const std::vector<KnownGraph>& refuted_survivors();

// The 20-vertex deficiency-4 graph that does admit a unit-distance drawing.
const KnownGraph& realizable_n20();

}  // namespace matchstick
