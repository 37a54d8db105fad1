#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace movekit {

/// A location in logical pixels. y grows downward.
struct Point {
    double x = 0.0;
    double y = 0.0;

    constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    constexpr Point operator*(double s) const { return {x * s, y * s}; }
    constexpr Point& operator+=(Point o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr bool operator==(const Point&) const = default;

    double length() const { return std::hypot(x, y); }
    bool isFinite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(Point a, Point b) { return (a - b).length(); }

/// z component of the cross product (b - a) x (c - a).
constexpr double cross(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

struct Size {
    double w = 0.0;
    double h = 0.0;
    constexpr bool operator==(const Size&) const = default;
};

/// Axis-aligned rectangle; (x, y) is the top-left corner.
struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    constexpr double left() const { return x; }
    constexpr double top() const { return y; }
    constexpr double right() const { return x + w; }
    constexpr double bottom() const { return y + h; }
    constexpr Point topLeft() const { return {x, y}; }
    constexpr Point center() const { return {x + w / 2, y + h / 2}; }
    constexpr Size size() const { return {w, h}; }

    constexpr Rect translated(double dx, double dy) const { return {x + dx, y + dy, w, h}; }
    constexpr Rect expanded(double margin) const {
        return {x - margin, y - margin, w + 2 * margin, h + 2 * margin};
    }
    /// Closed containment.
    constexpr bool contains(Point p) const {
        return p.x >= x && p.x <= right() && p.y >= y && p.y <= bottom();
    }
    /// True when `inner` lies inside this rect (edges may touch).
    constexpr bool contains(const Rect& inner) const {
        return inner.x >= x && inner.y >= y && inner.right() <= right() && inner.bottom() <= bottom();
    }
    bool isFinite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) && std::isfinite(h);
    }

    static constexpr Rect fromEdges(double l, double t, double r, double b) { return {l, t, r - l, b - t}; }

    constexpr bool operator==(const Rect&) const = default;
};

/// Rotation angle in radians, clockwise-positive on a y-down screen.
struct Angle {
    double radians = 0.0;

    static constexpr Angle degrees(double d) { return {d * std::numbers::pi / 180.0}; }

    /// The same direction expressed in (-pi, pi].
    Angle normalized() const {
        double r = std::remainder(radians, 2 * std::numbers::pi);
        if (r <= -std::numbers::pi) {
            r += 2 * std::numbers::pi;
        }
        return {r};
    }

    constexpr Angle operator+(Angle o) const { return {radians + o.radians}; }
    constexpr Angle operator-(Angle o) const { return {radians - o.radians}; }
    constexpr Angle operator-() const { return {-radians}; }
    constexpr bool operator==(const Angle&) const = default;
};

/// Direction of the vector from `from` to `to`.
inline Angle direction(Point from, Point to) { return {std::atan2(to.y - from.y, to.x - from.x)}; }

/// Euclidean distance from p to the closed segment ab. a == b is allowed.
double distPointSegment(Point p, Point a, Point b);

/// Half-plane test against every edge; boundary points are inside.
/// Either winding is accepted as long as it is consistent.
bool pointInConvexPolygon(Point p, std::span<const Point> vertices);

/// Rotates p about pivot; positive angles turn clockwise on screen.
Point rotatePoint(Point p, Point pivot, Angle angle);

/// Smallest rect containing every input. Throws std::invalid_argument on an empty list.
Rect boundsUnion(std::span<const Rect> rects);

/// Bounding box of a point set. Throws std::invalid_argument on an empty list.
Rect boundsOf(std::span<const Point> points);

/// Twice the signed area (positive for clockwise winding on a y-down screen).
double signedArea2(std::span<const Point> vertices);

/// True for a polygon with >= 3 vertices, nonzero area, and every turn in the same direction.
bool isStrictlyConvex(std::span<const Point> vertices);

/// Throws std::invalid_argument naming `what` when p is not finite.
void requireFinite(Point p, const char* what);

} // namespace movekit
