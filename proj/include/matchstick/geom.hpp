#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace matchstick {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double angle) const {
        double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
};

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Signed area of the triangle (a, b, c); positive when counterclockwise.
inline double orient(Vec2 a, Vec2 b, Vec2 c) { return (b - a).cross(c - a); }

// Shoelace area of a closed polygon; positive when counterclockwise.
double polygon_area(const std::vector<Vec2>& poly);

// Distance from point p to the closed segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

// Minimum distance between the closed segments [a,b] and [c,d].
double segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// True when the open interiors of [a,b] and [c,d] come within `tol` of each
// other or the segments properly cross.  Endpoint contact is not reported
// here; callers decide how shared endpoints are treated.
bool segments_conflict(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol);

// Both intersection points of the unit-radius circles centered at a and b,
// ordered so that the first lies to the left of a->b.  Returns nullopt when
// the centers are too far apart or coincident; `degenerate` is set when the
// discriminant is within `tol` of zero (tangent circles).
struct CircleIntersection {
    Vec2 left;
    Vec2 right;
    bool degenerate = false;
};
std::optional<CircleIntersection> unit_circle_intersection(Vec2 a, Vec2 b, double r1, double r2,
                                                           double tol = 1e-12);

}  // namespace matchstick
