#include "matchstick/planar_code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace matchstick {

namespace {

constexpr const char* kHeader = ">>planar_code<<";

}  // namespace

std::vector<PlaneGraph> planar_code_read(std::istream& in) {
    std::string header(15, '\0');
    in.read(header.data(), 15);
    if (in.gcount() != 15 || header != kHeader)
        throw PlanarCodeError(PlanarCodeErrorKind::BadHeader,
                              "expected '>>planar_code<<' header");

    std::vector<PlaneGraph> out;
    while (true) {
        int n = in.get();
        if (n == std::char_traits<char>::eof()) break;
        if (n == 0)
            throw PlanarCodeError(PlanarCodeErrorKind::VertexOutOfRange,
                                  "zero vertex count");
        std::vector<std::vector<VertexId>> rot(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                int b = in.get();
                if (b == std::char_traits<char>::eof())
                    throw PlanarCodeError(PlanarCodeErrorKind::TruncatedRecord,
                                          "record ended inside vertex " + std::to_string(v + 1));
                if (b == 0) break;
                if (b > n)
                    throw PlanarCodeError(PlanarCodeErrorKind::VertexOutOfRange,
                                          "neighbor byte " + std::to_string(b) +
                                              " in a graph with " + std::to_string(n) +
                                              " vertices");
                rot[v].push_back(b - 1);
            }
        }
        if (n == 1) {
            out.push_back(PlaneGraph::single_vertex());
            continue;
        }
        if (rot[0].empty())
            throw PlanarCodeError(PlanarCodeErrorKind::TruncatedRecord,
                                  "vertex 1 has no neighbors");
        VertexId first = rot[0][0];
        out.push_back(PlaneGraph::from_rotation_system(std::move(rot), {first, 0}));
    }
    return out;
}

std::vector<std::uint8_t> planar_code_record(const PlaneGraph& g) {
    // Normalize so the decode convention (outer face = face of vertex 1 and
    // its first listed neighbor) recovers this graph's outer face.  A cyclic
    // shift of one rotation list leaves the embedding untouched; relabeling
    // is needed only when vertex 0 is not on the outer face.
    const PlaneGraph* src = &g;
    PlaneGraph relabeled_copy = g;
    if (g.n() > 1 && !g.on_outer_face(0)) {
        VertexId pick = g.outer_face().boundary[0];
        std::vector<VertexId> perm(g.n());
        for (VertexId v = 0; v < g.n(); ++v) perm[v] = v;
        std::swap(perm[0], perm[pick]);
        relabeled_copy = g.relabeled(perm);
        src = &relabeled_copy;
    }

    std::vector<std::uint8_t> bytes;
    bytes.push_back(static_cast<std::uint8_t>(src->n()));
    if (src->n() == 1) {
        bytes.push_back(0);
        return bytes;
    }

    // Rotate vertex 0's list so the edge from its first neighbor into vertex
    // 0 lies on the outer walk (the decoder's outer-face convention).
    std::vector<VertexId> first_rot = src->rotation(0);
    int shift = 0;
    const int d0 = static_cast<int>(first_rot.size());
    for (; shift < d0; ++shift)
        if (src->face_of(first_rot[shift], 0) == src->outer_face_id()) break;
    if (shift == d0)
        throw std::logic_error("outer vertex without an outer directed edge");
    std::rotate(first_rot.begin(), first_rot.begin() + shift, first_rot.end());

    for (VertexId u : first_rot) bytes.push_back(static_cast<std::uint8_t>(u + 1));
    bytes.push_back(0);
    for (VertexId v = 1; v < src->n(); ++v) {
        for (VertexId u : src->rotation(v)) bytes.push_back(static_cast<std::uint8_t>(u + 1));
        bytes.push_back(0);
    }
    return bytes;
}

void planar_code_write(const std::vector<PlaneGraph>& graphs, std::ostream& out) {
    out.write(kHeader, 15);
    for (const PlaneGraph& g : graphs) {
        auto record = planar_code_record(g);
        out.write(reinterpret_cast<const char*>(record.data()),
                  static_cast<std::streamsize>(record.size()));
    }
}

}  // namespace matchstick
