#include "matchstick/known_graphs.hpp"

#include <algorithm>
#include <cmath>

namespace matchstick {

PlaneGraph plane_graph_from_drawing(const std::vector<Vec2>& coords,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges,
                                    const std::vector<BentEdge>& bends) {
    const int n = static_cast<int>(coords.size());
    std::vector<std::vector<VertexId>> rot(n);
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    auto direction = [&](VertexId from, VertexId to) -> Vec2 {
        for (const auto& b : bends) {
            if ((b.u == from && b.v == to) || (b.v == from && b.u == to))
                return b.control - coords[from];
        }
        return coords[to] - coords[from];
    };
    for (VertexId v = 0; v < n; ++v) {
        std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) {
            Vec2 da = direction(v, a);
            Vec2 db = direction(v, b);
            return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
        });
    }
    // Trace with a provisional hint, then pick the face whose polygon has
    // negative signed area (the unbounded face under CCW rotations).
    PlaneGraph provisional =
        PlaneGraph::from_rotation_system(rot, {edges[0].first, edges[0].second});
    int outer = -1;
    for (int f = 0; f < provisional.face_count(); ++f) {
        std::vector<Vec2> poly;
        for (VertexId v : provisional.face(f).boundary) poly.push_back(coords[v]);
        if (polygon_area(poly) < 0) {
            outer = f;
            break;
        }
    }
    if (outer < 0) throw std::runtime_error("drawing has no unbounded face");
    const Face& of = provisional.face(outer);
    return PlaneGraph::from_rotation_system(rot, {of.boundary[0], of.boundary[1]});
}

namespace {

std::vector<KnownGraph> make_refuted() {
    std::vector<KnownGraph> out;

    {
        KnownGraph k;
        k.name = "pentagon-pair-n14";
        k.layout = {{1, 0},   {1, 1},   {1, 2},   {0, 0.5},  {0, 1.5},  {3, 0},   {3, 1},
                    {3, 2},   {4, 0.5}, {4, 1.5}, {1.5, 1},  {2.5, 1},  {2, 2},   {2, 0.5}};
        k.edges = {{0, 1},  {1, 2},   {3, 4},   {5, 6},   {6, 7},   {8, 9},   {3, 1},
                   {4, 2},  {4, 1},   {3, 0},   {2, 12},  {12, 7},  {2, 10},  {12, 11},
                   {12, 10}, {7, 11}, {10, 11}, {7, 9},   {6, 8},   {6, 9},   {5, 8},
                   {10, 13}, {11, 13}, {13, 0}, {13, 5},  {0, 5}};
        k.focus = {0, 5};
        k.focus_required = 1.0;
        out.push_back(std::move(k));
    }
    {
        KnownGraph k;
        k.name = "quad-core-n14";
        k.layout = {{1, 0},   {2, 0},   {3, 0},   {3, 1},   {3, 2},   {2, 2},   {1, 2},
                    {1, 1},   {0, 0.5}, {0, 1.5}, {1.5, 0.5}, {2.5, 0.5}, {1.5, 1.5}, {2.5, 1.5}};
        k.edges = {{8, 9},  {0, 7},  {7, 6},  {8, 7},  {9, 6},  {9, 7},  {8, 0},
                   {6, 5},  {5, 4},  {0, 1},  {1, 2},  {6, 12}, {5, 13}, {5, 12},
                   {4, 13}, {0, 10}, {1, 11}, {1, 10}, {2, 11}, {12, 13}, {10, 11},
                   {10, 12}, {2, 3}, {3, 4},  {3, 11}, {3, 13}};
        k.focus = {0, 6};
        k.focus_required = 2.0;
        out.push_back(std::move(k));
    }
    {
        KnownGraph k;
        k.name = "strip-crown-n16";
        k.layout = {{0, 1},   {1, 1},   {2, 1},   {3, 1},   {4, 1},   {5, 1},
                    {0.5, 0}, {1.5, 0}, {2.5, 0}, {3.5, 0}, {4.5, 0},
                    {2, 2},   {1, 1.5}, {0, 1.5}, {1, 2},   {0, 2}};
        k.edges = {{0, 1},  {1, 2},  {3, 4},  {4, 5},  {6, 7},  {7, 8},  {8, 9},  {9, 10},
                   {6, 0},  {7, 1},  {8, 2},  {9, 3},  {10, 4}, {6, 1},  {7, 2},  {8, 3},
                   {9, 4},  {10, 5}, {11, 2}, {11, 3}, {11, 12}, {12, 0}, {12, 13}, {15, 14},
                   {14, 11}, {12, 14}, {13, 0}, {13, 15}, {13, 14}, {15, 5}};
        k.bends = {{15, 5, {5, 3.5}}};
        k.focus = {15, 5};
        k.focus_required = 1.0;
        out.push_back(std::move(k));
    }
    {
        KnownGraph k;
        k.name = "strip-crown-n15";
        k.layout = {{0, 1},   {1, 1},   {2, 1},   {3, 1},   {4, 1},   {5, 1},
                    {0.5, 0}, {1.5, 0}, {2.5, 0}, {3.5, 0}, {4.5, 0},
                    {2, 2},   {1, 1.5}, {0, 1.5}, {1, 2}};
        k.edges = {{0, 1},  {1, 2},  {3, 4},  {4, 5},  {6, 7},  {7, 8},  {8, 9},  {9, 10},
                   {6, 0},  {7, 1},  {8, 2},  {9, 3},  {10, 4}, {6, 1},  {7, 2},  {8, 3},
                   {9, 4},  {10, 5}, {11, 2}, {11, 3}, {11, 12}, {12, 0}, {12, 13}, {14, 11},
                   {12, 14}, {13, 0}, {13, 14}, {14, 5}};
        k.bends = {{14, 5, {5, 3.5}}};
        k.focus = {14, 5};
        k.focus_required = 1.0;
        out.push_back(std::move(k));
    }
    {
        KnownGraph k;
        k.name = "hinged-ring-n16";
        k.layout = {{0.75, 0}, {2.25, 0}, {0.75, 4}, {2.25, 4}, {0, 1},  {1.5, 1},
                    {3, 1},    {1, 1.5},  {2, 1.5},  {1, 2.5},  {2, 2.5}, {0, 2},
                    {0, 3},    {3, 2},    {3, 3},    {1.5, 3}};
        k.edges = {{12, 2}, {15, 3}, {15, 2}, {14, 3}, {4, 0},  {5, 1},  {5, 0},  {6, 1},
                   {4, 7},  {11, 7}, {11, 9}, {12, 9}, {6, 8},  {13, 8}, {13, 10}, {14, 10},
                   {0, 1},  {2, 3},  {4, 5},  {5, 6},  {4, 11}, {11, 12}, {6, 13}, {13, 14},
                   {7, 8},  {9, 10}, {7, 9},  {8, 10}, {12, 15}, {15, 14}};
        k.focus = {9, 10};
        k.focus_required = 1.0;
        out.push_back(std::move(k));
    }
    return out;
}

KnownGraph make_realizable_n20() {
    KnownGraph k;
    k.name = "double-collar-n20";
    k.layout = {{0, 0.5}, {0, 1.5}, {0, 2.5}, {1, 0},  {1, 1},  {1, 2},  {1, 3},
                {2, 0.5}, {2, 2.5}, {2.5, 0}, {2.5, 3}, {3, 0.5}, {3, 2.5}, {4, 0},
                {4, 1},   {4, 2},   {4, 3},   {5, 0.5}, {5, 1.5}, {5, 2.5}};
    k.edges = {{9, 7},   {7, 4},   {4, 1},   {9, 11},  {11, 14}, {14, 18}, {10, 8},
               {8, 5},   {5, 1},   {10, 12}, {12, 15}, {15, 18}, {7, 8},   {11, 12},
               {0, 1},   {1, 2},   {17, 18}, {18, 19}, {3, 9},   {9, 13},  {6, 10},
               {10, 16}, {0, 4},   {0, 3},   {2, 6},   {2, 5},   {17, 14}, {17, 13},
               {19, 16}, {19, 15}, {3, 4},   {5, 6},   {13, 14}, {15, 16}, {3, 7},
               {6, 8},   {13, 11}, {16, 12}};
    k.focus = {-1, -1};
    return k;
}

}  // namespace

const std::vector<KnownGraph>& refuted_survivors() {
    static const std::vector<KnownGraph> graphs = make_refuted();
    return graphs;
}

const KnownGraph& realizable_n20() {
    static const KnownGraph g = make_realizable_n20();
    return g;
}

}  // namespace matchstick
