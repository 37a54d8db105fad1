#include "movekit/geometry.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace movekit {

double distPointSegment(Point p, Point a, Point b) {
    if (b.x < a.x || (b.x == a.x && b.y < a.y)) {
        std::swap(a, b);
    }
    const Point ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) {
        return distance(p, a);
    }
    const Point ap = p - a;
    const double t = std::clamp((ap.x * ab.x + ap.y * ab.y) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

bool pointInConvexPolygon(Point p, std::span<const Point> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) {
        return false;
    }
    bool sawPositive = false;
    bool sawNegative = false;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = cross(vertices[i], vertices[(i + 1) % n], p);
        if (c > 0) {
            sawPositive = true;
        } else if (c < 0) {
            sawNegative = true;
        }
        if (sawPositive && sawNegative) {
            return false;
        }
    }
    return true;
}

Point rotatePoint(Point p, Point pivot, Angle angle) {
    const double c = std::cos(angle.radians);
    const double s = std::sin(angle.radians);
    const Point d = p - pivot;
    return {pivot.x + d.x * c - d.y * s, pivot.y + d.x * s + d.y * c};
}

Rect boundsUnion(std::span<const Rect> rects) {
    if (rects.empty()) {
        throw std::invalid_argument("boundsUnion: empty rect list");
    }
    double l = rects.front().left();
    double t = rects.front().top();
    double r = rects.front().right();
    double b = rects.front().bottom();
    for (const Rect& rc : rects.subspan(1)) {
        l = std::min(l, rc.left());
        t = std::min(t, rc.top());
        r = std::max(r, rc.right());
        b = std::max(b, rc.bottom());
    }
    return Rect::fromEdges(l, t, r, b);
}

Rect boundsOf(std::span<const Point> points) {
    if (points.empty()) {
        throw std::invalid_argument("boundsOf: empty point list");
    }
    double l = points.front().x;
    double t = points.front().y;
    double r = l;
    double b = t;
    for (const Point& p : points.subspan(1)) {
        l = std::min(l, p.x);
        t = std::min(t, p.y);
        r = std::max(r, p.x);
        b = std::max(b, p.y);
    }
    return Rect::fromEdges(l, t, r, b);
}

double signedArea2(std::span<const Point> vertices) {
    double sum = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices[i];
        const Point b = vertices[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum;
}

bool isStrictlyConvex(std::span<const Point> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) {
        return false;
    }
    for (const Point& v : vertices) {
        if (!v.isFinite()) {
            return false;
        }
    }
    const double area2 = signedArea2(vertices);
    if (area2 == 0.0) {
        return false;
    }
    const double sign = area2 > 0 ? 1.0 : -1.0;
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices[i];
        const Point b = vertices[(i + 1) % n];
        const Point c = vertices[(i + 2) % n];
        if (sign * cross(a, b, c) <= 0) {
            return false;
        }
        turning += std::abs((direction(b, c) - direction(a, b)).normalized().radians);
    }
    // Same-sign turns can still wind twice (a pentagram); a simple polygon turns exactly once.
    return std::abs(turning - 2 * std::numbers::pi) < 1e-6;
}

void requireFinite(Point p, const char* what) {
    if (!p.isFinite()) {
        throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
}

} // namespace movekit
