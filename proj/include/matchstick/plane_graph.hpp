#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchstick {

using VertexId = int;

enum class GraphErrorKind {
    AsymmetricRotation,
    Disconnected,
    NonzeroGenus,
    MultiEdge,
    Loop,
    BadOuterHint,
    TooSmall,
    TooLarge,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

struct Face {
    // Vertices in tracing order.  The walk may visit a vertex more than once
    // when the graph is only 1-connected.
    std::vector<VertexId> boundary;
    bool is_outer = false;

    int size() const { return static_cast<int>(boundary.size()); }
};

// Integer invariants of a plane graph: vertex/edge/face counts, the outer
// parameters k and tau, and the census of face sizes (outer face included).
struct FaceProfile {
    int n = 0;
    int edges = 0;
    int faces = 0;
    int k = 0;    // distinct vertices on the outer face
    int tau = 0;  // 4k - sum of outer-vertex degrees
    std::map<int, int> census;

    int census_at(int i) const {
        auto it = census.find(i);
        return it == census.end() ? 0 : it->second;
    }
};

struct QuadComponent {
    std::vector<int> quad_faces;  // face ids, bounded faces only
    int q = 0;                    // number of quadrangles
    int boundary_length = 0;      // edges incident to exactly one member face
    // disk-like patch (vertices - edges + q == 1); annular components wrap
    // other faces and sit outside the isoperimetric bound's scope
    bool simply_connected = true;
};

struct QuadDecomposition {
    std::vector<QuadComponent> components;
};

// Total-order key over plane graphs: equal exactly for graphs isomorphic
// under relabeling, re-rooting along the outer boundary, and reflection.
// The byte layout matches a planar_code record of the relabeled graph.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCode&) const = default;
    std::string hex() const;
    static CanonicalCode from_hex(const std::string& hex);
};

// Combinatorial plane embedding: a symmetric rotation system plus a
// distinguished outer face.  Immutable after construction.
class PlaneGraph {
public:
    PlaneGraph() = default;  // empty; fill via the factories below

    // `rotation[v]` lists the neighbors of v in counterclockwise order.
    // `outer_hint` is a directed edge (u, v); the face traced from it becomes
    // the outer face.  Rejects loops, multi-edges, disconnected input, and
    // rotation systems of nonzero genus.
    static PlaneGraph from_rotation_system(std::vector<std::vector<VertexId>> rotation,
                                           std::pair<VertexId, VertexId> outer_hint);

    static PlaneGraph single_vertex();

    // Construction without the symmetry/simplicity/connectivity validation,
    // for callers that build rotations by correct local surgery.  Face
    // tracing and the Euler check still run.
    static PlaneGraph from_trusted_rotation_system(std::vector<std::vector<VertexId>> rotation,
                                                   std::pair<VertexId, VertexId> outer_hint);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<VertexId>& rotation(VertexId v) const { return rot_[v]; }
    const std::vector<std::vector<VertexId>>& rotation_system() const { return rot_; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    int outer_face_id() const { return outer_face_; }
    const Face& outer_face() const { return faces_[outer_face_]; }

    // Face containing the directed edge (u -> v).
    int face_of(VertexId u, VertexId v) const;
    bool contains_edge(VertexId u, VertexId v) const;

    bool on_outer_face(VertexId v) const { return outer_flag_[v]; }
    // Number of times the outer walk visits v.
    int outer_visits(VertexId v) const { return outer_visits_[v]; }
    // Distinct vertices on the outer face (the k of the face profile).
    int outer_distinct() const { return outer_distinct_; }
    // Outer size with each repeated outer visit discounted; equals
    // outer_distinct() on 2-connected graphs.  Classification queries key on
    // this so that graphs pinched at cut vertices group with their pieces.
    int outer_size_adjusted() const {
        return 2 * outer_distinct_ - outer_face().size();
    }

    // Degree constraints of the 4-regular setting: outer vertices <= 4,
    // all interior vertices exactly 4.
    bool degrees_admissible() const;

    // Test helpers: relabel by a permutation / mirror the embedding.
    PlaneGraph relabeled(const std::vector<VertexId>& perm) const;
    PlaneGraph mirrored() const;

private:
    void trace_faces(std::pair<VertexId, VertexId> outer_hint);

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<VertexId>> rot_;
    std::vector<Face> faces_;
    int outer_face_ = -1;
    // face_at_[v][j] = face containing the directed edge (v, rot_[v][j]).
    std::vector<std::vector<int>> face_at_;
    std::vector<char> outer_flag_;
    std::vector<int> outer_visits_;
    int outer_distinct_ = 0;

    friend PlaneGraph glue_face_for_tests(const PlaneGraph&, int, int, int);
    friend class Expander;
};

FaceProfile face_profile(const PlaneGraph& g);

// 1 when a cut vertex exists, 2 when no cut vertex but a cut pair exists,
// 3 otherwise ("3+").  Throws TooSmall for n < 2.
int connectivity_level(const PlaneGraph& g);

QuadDecomposition quadrangle_decomposition(const PlaneGraph& g);

CanonicalCode canonical_code(const PlaneGraph& g);
PlaneGraph decode_canonical(const CanonicalCode& code);

}  // namespace matchstick
