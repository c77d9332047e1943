#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "matchstick/plane_graph.hpp"

namespace matchstick {

enum class PlanarCodeErrorKind { BadHeader, TruncatedRecord, VertexOutOfRange };

class PlanarCodeError : public std::runtime_error {
public:
    PlanarCodeError(PlanarCodeErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    PlanarCodeErrorKind kind() const { return kind_; }

private:
    PlanarCodeErrorKind kind_;
};

// Binary interchange: ">>planar_code<<" header, then per graph one vertex
// count byte (n <= 255) followed by each vertex's neighbor list in rotation
// order, 1-indexed and 0-terminated.  Decoding takes the face entered along
// (first listed neighbor of vertex 1 -> vertex 1) as the outer face;
// encoding shifts the first rotation (and relabels only when vertex 1 is
// interior) so that the convention holds, which keeps byte streams fixed
// under decode+encode.
std::vector<PlaneGraph> planar_code_read(std::istream& in);
void planar_code_write(const std::vector<PlaneGraph>& graphs, std::ostream& out);

std::vector<std::uint8_t> planar_code_record(const PlaneGraph& g);

}  // namespace matchstick
