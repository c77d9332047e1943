#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matchstick/criteria.hpp"
#include "matchstick/geom.hpp"
#include "matchstick/plane_graph.hpp"

namespace matchstick {

// Unit-length straight-line drawing of a plane graph plus quality metrics.
struct Realization {
    std::vector<Vec2> coords;
    double max_edge_error = 0.0;  // max | |e| - 1 | over edges
    bool crossing_free = false;
    double outer_area = 0.0;  // absolute shoelace area of the outer walk

    // Area in units of the unit triangle, comparable with area_upper(k).
    double area_ratio() const { return outer_area / (std::sqrt(3.0) / 4.0); }
};

// A distance requirement discovered during propagation, with the value the
// placed coordinates actually produce.
struct ForcedCheck {
    VertexId u = -1;
    VertexId v = -1;
    double required = 0.0;
    double measured = 0.0;
    std::string note;

    double gap() const { return std::abs(measured - required); }
};

struct PartialPlacement {
    std::vector<Vec2> pos;
    std::vector<char> placed;
    std::vector<ForcedCheck> forced;          // requirements checked en route
    std::optional<ForcedCheck> violation;     // first requirement off by > 1e-6
    bool complete = false;
    bool degenerate = false;  // a circle intersection was within tolerance of tangent
    std::string stall;        // why propagation stopped short, when it did

    int placed_count() const {
        int c = 0;
        for (char f : placed) c += f;
        return c;
    }
};

// One-parameter (after linear constraints) family of placements with a
// vertex-pair distance as objective.
struct FlexSystem {
    struct Param {
        std::string name;
        double lo = 0.0;
        double hi = 0.0;
    };
    struct Constraint {
        std::vector<double> coeffs;
        double rhs = 0.0;
    };
    std::vector<Param> params;
    std::vector<Constraint> constraints;
    std::function<std::optional<std::vector<Vec2>>(const std::vector<double>&)> place;
    std::pair<VertexId, VertexId> objective{-1, -1};
};

struct FlexScanResult {
    double min = 0.0;
    double max = 0.0;
    std::vector<double> argmin;
    std::vector<double> argmax;
};

struct RealizeVerdict {
    enum class Tag { Realizable, Infeasible, Flexible, Unknown };
    Tag tag = Tag::Unknown;
    std::optional<Realization> realization;
    std::optional<ForcedCheck> witness;
    std::string detail;
    double gap = 0.0;  // refutation margin for non-realizable verdicts

    bool realizable() const { return tag == Tag::Realizable; }
    static const char* tag_name(Tag t);
};

struct SolveOptions {
    double tol = 1e-9;       // max edge error accepted for Realizable
    int restarts = 64;       // least-squares restarts
    int flex_samples = 2048; // dense scan budget for one-parameter families
    std::uint64_t seed = 0;  // combined with the canonical code for determinism
};

// Coordinate propagation from a base directed edge placed at (0,0)->(1,0):
// circle-intersection placement of vertices with two placed neighbors, plus
// attachment of precomputed rigid clusters (shared-vertex alignment and
// one-shared-vertex-plus-edge rotation).  Orientation always follows the
// rotation system.
PartialPlacement rigid_propagate(const PlaneGraph& g, std::pair<VertexId, VertexId> base);

// Pass iff all edges have length within tol of 1, no two edges conflict
// (shared endpoints allowed), and the drawing's angular orders and outer
// face match the combinatorial embedding (up to one global reflection).
Verdict verify_realization(const PlaneGraph& g, const std::vector<Vec2>& coords, double tol);

FlexScanResult flex_scan(const FlexSystem& fs, int samples);

RealizeVerdict solve(const PlaneGraph& g, const SolveOptions& opts = {});

// Planar straight-line layout with the outer face on a regular polygon and
// interior vertices at the average of their neighbors.  Used for drawing and
// as the least-squares starting point.
std::vector<Vec2> tutte_layout(const PlaneGraph& g);

// Sum of squared edge-length residuals and its gradient; exposed for tests.
double edge_residual_sum(const PlaneGraph& g, const std::vector<Vec2>& coords);
std::vector<double> edge_residual_gradient(const PlaneGraph& g, const std::vector<Vec2>& coords);

}  // namespace matchstick
