#include "matchstick/svg.hpp"

#include <fstream>
#include <sstream>

#include "matchstick/realizer.hpp"

namespace matchstick {

namespace {
constexpr double kScale = 100.0;  // drawing units per stick
constexpr double kRadius = 4.0;
}  // namespace

std::string render_svg(const PlaneGraph& g, const std::optional<std::vector<Vec2>>& coords) {
    std::vector<Vec2> pos;
    bool combinatorial = !coords.has_value();
    pos = combinatorial ? tutte_layout(g) : *coords;

    double minx = 1e100, miny = 1e100, maxx = -1e100, maxy = -1e100;
    for (const auto& p : pos) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    if (pos.empty()) minx = miny = maxx = maxy = 0.0;
    double pad = 0.25;
    double w = (maxx - minx + 2 * pad) * kScale;
    double h = (maxy - miny + 2 * pad) * kScale;
    auto X = [&](double x) { return (x - minx + pad) * kScale; };
    auto Y = [&](double y) { return (maxy - y + pad) * kScale; };  // flip y for svg

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.rotation(u)) {
            if (v < u) continue;
            os << "  <line x1=\"" << X(pos[u].x) << "\" y1=\"" << Y(pos[u].y) << "\" x2=\""
               << X(pos[v].x) << "\" y2=\"" << Y(pos[v].y)
               << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        }
    for (VertexId v = 0; v < g.n(); ++v)
        os << "  <circle cx=\"" << X(pos[v].x) << "\" cy=\"" << Y(pos[v].y) << "\" r=\"" << kRadius
           << "\" fill=\"black\"/>\n";
    if (combinatorial)
        os << "  <text x=\"8\" y=\"16\" font-size=\"14\">combinatorial only</text>\n";
    os << "</svg>\n";
    return os.str();
}

void export_svg(const PlaneGraph& g, const std::optional<std::vector<Vec2>>& coords,
                const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_svg(g, coords);
}

}  // namespace matchstick
