#include "matchstick/geom.hpp"

#include <algorithm>

namespace matchstick {

double polygon_area(const std::vector<Vec2>& poly) {
    double acc = 0.0;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % m];
        acc += p.x * q.y - q.x * p.y;
    }
    return 0.5 * acc;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = ab.norm2();
    if (len2 == 0.0) return dist(p, a);
    double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

double segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    double o1 = orient(a, b, c);
    double o2 = orient(a, b, d);
    double o3 = orient(c, d, a);
    double o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != o2 && o3 != o4) {
        return 0.0;  // proper crossing
    }
    return std::min(std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)),
                    std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)));
}

bool segments_conflict(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
    return segment_distance(a, b, c, d) < tol;
}

std::optional<CircleIntersection> unit_circle_intersection(Vec2 a, Vec2 b, double r1, double r2,
                                                           double tol) {
    Vec2 ab = b - a;
    double d = ab.norm();
    if (d < tol) return std::nullopt;
    if (d > r1 + r2 + tol) return std::nullopt;
    if (d + tol < std::abs(r1 - r2)) return std::nullopt;
    double t = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    double h2 = r1 * r1 - t * t;
    bool degen = h2 < tol;
    double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    Vec2 base = a + ab * (t / d);
    Vec2 up = ab.perp() * (h / d);
    CircleIntersection out;
    out.left = base + up;
    out.right = base - up;
    out.degenerate = degen;
    return out;
}

}  // namespace matchstick
