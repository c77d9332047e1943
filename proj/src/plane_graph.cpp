#include "matchstick/plane_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <queue>
#include <set>

namespace matchstick {

namespace {

int index_of(const std::vector<VertexId>& rot, VertexId v) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == v) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit in canonical code");
    };
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length canonical code hex");
    CanonicalCode code;
    code.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2)
        code.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return code;
}

PlaneGraph PlaneGraph::single_vertex() {
    PlaneGraph g;
    g.n_ = 1;
    g.edge_count_ = 0;
    g.rot_.resize(1);
    g.face_at_.resize(1);
    Face outer;
    outer.boundary = {0};
    outer.is_outer = true;
    g.faces_.push_back(outer);
    g.outer_face_ = 0;
    g.outer_flag_ = {1};
    g.outer_visits_ = {1};
    g.outer_distinct_ = 1;
    return g;
}

PlaneGraph PlaneGraph::from_trusted_rotation_system(
    std::vector<std::vector<VertexId>> rotation, std::pair<VertexId, VertexId> outer_hint) {
    PlaneGraph g;
    g.n_ = static_cast<int>(rotation.size());
    g.rot_ = std::move(rotation);
    int deg_sum = 0;
    for (VertexId v = 0; v < g.n_; ++v) deg_sum += g.degree(v);
    g.edge_count_ = deg_sum / 2;
    g.trace_faces(outer_hint);
    return g;
}

PlaneGraph PlaneGraph::from_rotation_system(std::vector<std::vector<VertexId>> rotation,
                                            std::pair<VertexId, VertexId> outer_hint) {
    const int n = static_cast<int>(rotation.size());
    if (n == 0) throw GraphError(GraphErrorKind::TooSmall, "empty rotation system");
    if (n > 255) throw GraphError(GraphErrorKind::TooLarge, "more than 255 vertices");
    if (n == 1) {
        if (!rotation[0].empty())
            throw GraphError(GraphErrorKind::AsymmetricRotation, "single vertex with neighbors");
        return single_vertex();
    }

    for (VertexId v = 0; v < n; ++v) {
        const auto& row = rotation[v];
        for (std::size_t i = 0; i < row.size(); ++i) {
            VertexId u = row[i];
            if (u < 0 || u >= n)
                throw GraphError(GraphErrorKind::AsymmetricRotation, "neighbor out of range");
            if (u == v) throw GraphError(GraphErrorKind::Loop, "loop edge");
            for (std::size_t j = i + 1; j < row.size(); ++j)
                if (row[j] == u)
                    throw GraphError(GraphErrorKind::MultiEdge, "repeated neighbor");
        }
    }
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : rotation[v])
            if (index_of(rotation[u], v) < 0)
                throw GraphError(GraphErrorKind::AsymmetricRotation,
                                 "vertex " + std::to_string(v) + " lists " + std::to_string(u) +
                                     " but not vice versa");

    PlaneGraph g;
    g.n_ = n;
    g.rot_ = std::move(rotation);
    int deg_sum = 0;
    for (VertexId v = 0; v < n; ++v) deg_sum += g.degree(v);
    g.edge_count_ = deg_sum / 2;

    // connectivity
    std::vector<char> vis(n, 0);
    std::queue<VertexId> bfs;
    bfs.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        for (VertexId u : g.rot_[v])
            if (!vis[u]) {
                vis[u] = 1;
                ++reached;
                bfs.push(u);
            }
    }
    if (reached != n) throw GraphError(GraphErrorKind::Disconnected, "graph is disconnected");

    g.trace_faces(outer_hint);
    return g;
}

void PlaneGraph::trace_faces(std::pair<VertexId, VertexId> outer_hint) {
    face_at_.assign(n_, {});
    for (VertexId v = 0; v < n_; ++v) face_at_[v].assign(rot_[v].size(), -1);

    // Successor of directed edge (u -> v) on its face: (v -> w) where w is
    // the predecessor of u in the counterclockwise rotation at v.  Interior
    // faces come out counterclockwise, the outer face clockwise.
    for (VertexId v0 = 0; v0 < n_; ++v0) {
        for (std::size_t j0 = 0; j0 < rot_[v0].size(); ++j0) {
            if (face_at_[v0][j0] >= 0) continue;
            int fid = static_cast<int>(faces_.size());
            Face f;
            VertexId u = v0;
            int j = static_cast<int>(j0);
            do {
                face_at_[u][j] = fid;
                f.boundary.push_back(u);
                VertexId v = rot_[u][j];
                int iu = index_of(rot_[v], u);
                int jn = (iu - 1 + static_cast<int>(rot_[v].size())) %
                         static_cast<int>(rot_[v].size());
                u = v;
                j = jn;
            } while (!(u == v0 && j == static_cast<int>(j0)));
            faces_.push_back(std::move(f));
        }
    }

    int euler = n_ - edge_count_ + static_cast<int>(faces_.size());
    if (euler != 2)
        throw GraphError(GraphErrorKind::NonzeroGenus,
                         "Euler characteristic " + std::to_string(euler) + ", expected 2");

    auto [hu, hv] = outer_hint;
    if (hu < 0 || hu >= n_)
        throw GraphError(GraphErrorKind::BadOuterHint, "outer hint tail out of range");
    int hj = index_of(rot_[hu], hv);
    if (hj < 0) throw GraphError(GraphErrorKind::BadOuterHint, "outer hint is not an edge");
    outer_face_ = face_at_[hu][hj];
    faces_[outer_face_].is_outer = true;

    outer_flag_.assign(n_, 0);
    outer_visits_.assign(n_, 0);
    for (VertexId v : faces_[outer_face_].boundary) {
        if (!outer_flag_[v]) ++outer_distinct_;
        outer_flag_[v] = 1;
        ++outer_visits_[v];
    }
}

int PlaneGraph::face_of(VertexId u, VertexId v) const {
    int j = index_of(rot_[u], v);
    if (j < 0) throw GraphError(GraphErrorKind::BadOuterHint, "face_of on a non-edge");
    return face_at_[u][j];
}

bool PlaneGraph::contains_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_) return false;
    return index_of(rot_[u], v) >= 0;
}

bool PlaneGraph::degrees_admissible() const {
    for (VertexId v = 0; v < n_; ++v) {
        if (outer_flag_[v]) {
            if (degree(v) > 4) return false;
        } else {
            if (degree(v) != 4) return false;
        }
    }
    return true;
}

PlaneGraph PlaneGraph::relabeled(const std::vector<VertexId>& perm) const {
    std::vector<std::vector<VertexId>> rot(n_);
    for (VertexId v = 0; v < n_; ++v) {
        std::vector<VertexId> row;
        row.reserve(rot_[v].size());
        for (VertexId u : rot_[v]) row.push_back(perm[u]);
        rot[perm[v]] = std::move(row);
    }
    const Face& outer = faces_[outer_face_];
    std::pair<VertexId, VertexId> hint;
    if (n_ == 1) return single_vertex();
    hint = {perm[outer.boundary[0]], perm[outer.boundary[1]]};
    return from_rotation_system(std::move(rot), hint);
}

PlaneGraph PlaneGraph::mirrored() const {
    if (n_ == 1) return single_vertex();
    std::vector<std::vector<VertexId>> rot(n_);
    for (VertexId v = 0; v < n_; ++v) {
        rot[v].assign(rot_[v].rbegin(), rot_[v].rend());
    }
    const Face& outer = faces_[outer_face_];
    // Reversing all rotations flips every directed edge of the outer walk.
    std::pair<VertexId, VertexId> hint = {outer.boundary[1], outer.boundary[0]};
    return from_rotation_system(std::move(rot), hint);
}

FaceProfile face_profile(const PlaneGraph& g) {
    FaceProfile p;
    p.n = g.n();
    p.edges = g.edge_count();
    p.faces = g.face_count();
    p.k = g.outer_distinct();
    int outer_degree_sum = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (g.on_outer_face(v)) outer_degree_sum += g.degree(v);
    p.tau = 4 * p.k - outer_degree_sum;
    for (const Face& f : g.faces())
        if (f.size() > 0) p.census[f.size()]++;
    return p;
}

namespace {

bool connected_after_deletion(const PlaneGraph& g, const std::vector<char>& deleted) {
    int start = -1;
    int alive = 0;
    for (VertexId v = 0; v < g.n(); ++v)
        if (!deleted[v]) {
            if (start < 0) start = v;
            ++alive;
        }
    if (alive == 0) return true;
    std::vector<char> vis(g.n(), 0);
    std::queue<VertexId> bfs;
    bfs.push(start);
    vis[start] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        for (VertexId u : g.rotation(v)) {
            if (deleted[u] || vis[u]) continue;
            vis[u] = 1;
            ++reached;
            bfs.push(u);
        }
    }
    return reached == alive;
}

}  // namespace

int connectivity_level(const PlaneGraph& g) {
    if (g.n() < 2) throw GraphError(GraphErrorKind::TooSmall, "connectivity needs n >= 2");
    std::vector<char> deleted(g.n(), 0);
    for (VertexId v = 0; v < g.n(); ++v) {
        deleted[v] = 1;
        bool ok = connected_after_deletion(g, deleted);
        deleted[v] = 0;
        if (!ok) return 1;
    }
    for (VertexId v = 0; v < g.n(); ++v) {
        for (VertexId u = v + 1; u < g.n(); ++u) {
            deleted[v] = deleted[u] = 1;
            bool ok = connected_after_deletion(g, deleted);
            deleted[v] = deleted[u] = 0;
            if (!ok) return 2;
        }
    }
    return 3;
}

QuadDecomposition quadrangle_decomposition(const PlaneGraph& g) {
    // bounded quadrangles only: the unbounded face is not a quadrangle of
    // the drawing even when its walk has four edges
    std::vector<int> quads;
    for (int f = 0; f < g.face_count(); ++f)
        if (g.face(f).size() == 4 && f != g.outer_face_id()) quads.push_back(f);

    QuadDecomposition out;
    if (quads.empty()) return out;

    std::vector<int> comp(g.face_count(), -1);
    // Union by BFS over shared edges.
    std::vector<char> is_quad(g.face_count(), 0);
    for (int f : quads) is_quad[f] = 1;

    int ncomp = 0;
    for (int f0 : quads) {
        if (comp[f0] >= 0) continue;
        std::queue<int> bfs;
        bfs.push(f0);
        comp[f0] = ncomp;
        while (!bfs.empty()) {
            int f = bfs.front();
            bfs.pop();
            const Face& face = g.face(f);
            const int m = face.size();
            for (int i = 0; i < m; ++i) {
                VertexId u = face.boundary[i];
                VertexId v = face.boundary[(i + 1) % m];
                int other = g.face_of(v, u);  // face on the other side of (u,v)
                if (is_quad[other] && comp[other] < 0) {
                    comp[other] = ncomp;
                    bfs.push(other);
                }
            }
        }
        ++ncomp;
    }

    out.components.resize(ncomp);
    for (int f : quads) out.components[comp[f]].quad_faces.push_back(f);
    for (auto& c : out.components) c.q = static_cast<int>(c.quad_faces.size());

    // Boundary length: edges with exactly one incident face in the component.
    for (auto& c : out.components) {
        int boundary = 0;
        std::set<VertexId> verts;
        std::set<std::pair<VertexId, VertexId>> edges;
        for (int f : c.quad_faces) {
            const Face& face = g.face(f);
            const int m = face.size();
            for (int i = 0; i < m; ++i) {
                VertexId u = face.boundary[i];
                VertexId v = face.boundary[(i + 1) % m];
                verts.insert(u);
                edges.insert({std::min(u, v), std::max(u, v)});
                int other = g.face_of(v, u);
                if (!(is_quad[other] && comp[other] == comp[f])) ++boundary;
            }
        }
        c.boundary_length = boundary;
        c.simply_connected =
            static_cast<int>(verts.size()) - static_cast<int>(edges.size()) + c.q == 1;
    }
    return out;
}

namespace {

// Breadth-first edge code rooted at the directed edge (u0, v0), compared
// lazily against the best code so far.  Vertices are numbered in discovery
// order; each vertex lists its rotation starting from the edge back to its
// parent, walked forward or backward.  The byte layout equals a planar_code
// record of the relabeled graph.  Returns true when `cur` is a new strict
// minimum (cur then holds the full code); aborts early once the candidate
// proves lexicographically worse than `best`.
class CodeBuilder {
public:
    explicit CodeBuilder(const PlaneGraph& g)
        : g_(g), label_(g.n(), 0), stamp_(g.n(), -1), first_(g.n(), -1) {
        order_.reserve(g.n());
    }

    bool run(VertexId u0, VertexId v0, bool reversed, std::vector<std::uint8_t>& best,
             std::vector<std::uint8_t>& cur) {
        ++generation_;
        cur.clear();
        cur.push_back(static_cast<std::uint8_t>(g_.n()));
        order_.clear();
        set_label(u0, 1, v0);
        order_.push_back(u0);
        int next = 1;
        // compare state: 0 = equal so far, 1 = strictly better
        int state = best.empty() ? 1 : 0;
        std::size_t pos = 1;

        for (std::size_t qi = 0; qi < order_.size(); ++qi) {
            VertexId w = order_[qi];
            const auto& rot = g_.rotation(w);
            const int d = static_cast<int>(rot.size());
            int start = 0;
            for (int i = 0; i < d; ++i)
                if (rot[i] == first_at(w)) {
                    start = i;
                    break;
                }
            for (int i = 0; i <= d; ++i) {
                std::uint8_t byte;
                if (i == d) {
                    byte = 0;
                } else {
                    int idx = reversed ? (start - i + 2 * d) % d : (start + i) % d;
                    VertexId nb = rot[idx];
                    if (label_of(nb) == 0) {
                        set_label(nb, ++next, w);
                        order_.push_back(nb);
                    }
                    byte = static_cast<std::uint8_t>(label_of(nb));
                }
                cur.push_back(byte);
                if (state == 0) {
                    if (byte < best[pos])
                        state = 1;
                    else if (byte > best[pos])
                        return false;  // worse; abandon this root
                    ++pos;
                }
            }
        }
        return state == 1;
    }

private:
    int label_of(VertexId v) const { return stamp_[v] == generation_ ? label_[v] : 0; }
    int first_at(VertexId v) const { return first_[v]; }
    void set_label(VertexId v, int lab, VertexId parent) {
        label_[v] = lab;
        stamp_[v] = generation_;
        first_[v] = parent;
    }

    const PlaneGraph& g_;
    std::vector<int> label_;
    std::vector<int> stamp_;
    std::vector<VertexId> first_;
    std::vector<VertexId> order_;
    int generation_ = 0;
};

}  // namespace

CanonicalCode canonical_code(const PlaneGraph& g) {
    CanonicalCode best;
    if (g.n() == 1) {
        best.bytes = {1, 0};
        return best;
    }
    const Face& outer = g.outer_face();
    const int m = outer.size();
    CodeBuilder builder(g);
    std::vector<std::uint8_t> cur;
    cur.reserve(1 + g.n() + 2 * g.edge_count());
    // The root's rotation row is always [2, 3, ..., deg+1, 0], so only roots
    // of minimum outer degree can produce the lexicographic minimum.
    int dmin = g.n();
    for (VertexId v : outer.boundary) dmin = std::min(dmin, g.degree(v));
    for (int i = 0; i < m; ++i) {
        VertexId u = outer.boundary[i];
        VertexId v = outer.boundary[(i + 1) % m];
        if (g.degree(u) == dmin && builder.run(u, v, false, best.bytes, cur))
            best.bytes = cur;
        // Mirror pass: the outer walk of the reflected embedding traverses
        // the same edges in the opposite direction.
        if (g.degree(v) == dmin && builder.run(v, u, true, best.bytes, cur))
            best.bytes = cur;
    }
    return best;
}

PlaneGraph decode_canonical(const CanonicalCode& code) {
    const auto& b = code.bytes;
    if (b.empty()) throw GraphError(GraphErrorKind::TooSmall, "empty canonical code");
    int n = b[0];
    if (n == 1) return PlaneGraph::single_vertex();
    std::vector<std::vector<VertexId>> rot(n);
    std::size_t pos = 1;
    for (int v = 0; v < n; ++v) {
        while (pos < b.size() && b[pos] != 0) {
            rot[v].push_back(static_cast<VertexId>(b[pos]) - 1);
            ++pos;
        }
        if (pos >= b.size()) throw GraphError(GraphErrorKind::AsymmetricRotation,
                                              "truncated canonical code");
        ++pos;  // skip terminator
    }
    if (rot[0].empty())
        throw GraphError(GraphErrorKind::Disconnected, "canonical code with isolated root");
    VertexId first_nb = rot[0][0];
    return PlaneGraph::from_rotation_system(std::move(rot), {0, first_nb});
}

}  // namespace matchstick
