#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "movekit/geometry.hpp"

namespace movekit {

struct Circle {
    Point center;
    double radius = 0.0;
};

/// A strip with two semicircles at the ends: every point within halfWidth of segment p1p2.
struct Capsule {
    Point p1;
    Point p2;
    double halfWidth = 0.0;
};

struct ConvexPolygon {
    std::vector<Point> vertices;
};

using NodeShape = std::variant<Circle, Capsule, ConvexPolygon>;

/// How a grabbed node may move on its own. None means grabbing it moves the whole element.
enum class Freedom { Any, NS, WE, None };

enum class Cursor { Default, MoveAll, SizeNS, SizeWE, SizeNWSE, SizeNESW, SizeAll, Rotate, Hand };

std::string_view toString(Freedom f);
std::string_view toString(Cursor c);
std::optional<Cursor> cursorFromString(std::string_view name);

/// Throws std::invalid_argument when the shape violates its invariants
/// (non-positive radius or half width, non-convex or zero-area polygon, non-finite data).
void validateShape(const NodeShape& shape);

/// Boundary inclusive.
bool shapeContains(const NodeShape& shape, Point p);

NodeShape translatedShape(const NodeShape& shape, Point delta);

/// One sensitive area of a cover.
class CoverNode {
public:
    CoverNode(NodeShape shape, Freedom freedom, Cursor cursor);

    static CoverNode circle(Point center, double radius, Freedom freedom, Cursor cursor);
    static CoverNode capsule(Point p1, Point p2, double halfWidth, Freedom freedom, Cursor cursor);
    static CoverNode polygon(std::vector<Point> vertices, Freedom freedom, Cursor cursor);
    static CoverNode rect(const Rect& r, Freedom freedom, Cursor cursor);

    const NodeShape& shape() const { return shape_; }
    Freedom freedom() const { return freedom_; }
    Cursor cursor() const { return cursor_; }

    bool contains(Point p) const { return shapeContains(shape_, p); }

private:
    NodeShape shape_;
    Freedom freedom_;
    Cursor cursor_;
};

inline bool nodeContains(const CoverNode& node, Point p) { return node.contains(p); }

/// Ordered set of nodes; a node's index is its identity. Nodes may overlap,
/// and the earliest declared node wins.
class Cover {
public:
    Cover() = default;
    explicit Cover(std::vector<CoverNode> nodes) : nodes_(std::move(nodes)) {}

    void add(CoverNode node) { nodes_.push_back(std::move(node)); }
    void append(const Cover& other);

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    const CoverNode& node(std::size_t i) const { return nodes_.at(i); }
    std::span<const CoverNode> nodes() const { return nodes_; }

    /// Index of the first node containing p.
    std::optional<std::size_t> hit(Point p) const;
    std::optional<Cursor> cursorAt(Point p) const;

private:
    std::vector<CoverNode> nodes_;
};

inline std::optional<std::size_t> coverHit(const Cover& cover, Point p) { return cover.hit(p); }
inline std::optional<Cursor> cursorAt(const Cover& cover, Point p) { return cover.cursorAt(p); }

enum class ResizePolicy { NoResize, WEOnly, NSOnly, Full };

std::string_view toString(ResizePolicy policy);

struct SizeLimits {
    Size min;
    Size max;

    /// min <= size <= max componentwise.
    bool admits(Size s) const { return s.w >= min.w && s.w <= max.w && s.h >= min.h && s.h <= max.h; }
    Size clamp(Size s) const;
};

/// An axis is resizable iff min < max on that axis.
/// Throws std::invalid_argument when min exceeds max or either bound is negative.
ResizePolicy policyFromLimits(const SizeLimits& limits);

/// Role of each node of a rectangular frame cover.
enum class FrameHandle {
    TopLeft,
    TopRight,
    BottomRight,
    BottomLeft,
    Top,
    Right,
    Bottom,
    Left,
    Strip, // moves the whole element
};

/// Default width of the frame band around controls, in logical pixels.
inline constexpr double kDefaultFrameWidth = 6.0;

/// Handle roles in declaration order for the given policy: corners, mid-side nodes, then the four strips.
std::vector<FrameHandle> rectFrameHandles(ResizePolicy policy);

/// Length of a mid-side resize node for a side of the given length.
double midNodeLength(double side);

/// Cover of the band between `rect` and `rect` expanded by frameWidth. The rect
/// interior belongs to no node. Resize nodes precede the move strips.
Cover makeRectFrameCover(const Rect& rect, double frameWidth, ResizePolicy policy);

/// Cover for a graphical rectangle that is moved by any inner point and resized by
/// any border point: corner squares, side strips of width 2*halfWidth along each
/// resizable border, then the body. Node roles follow rectBorderHandles().
Cover makeRectBorderCover(const Rect& rect, double halfWidth, ResizePolicy policy);
std::vector<FrameHandle> rectBorderHandles(ResizePolicy policy);

/// Many small border circles for each radius (freedom Any) followed by the body:
/// one disc for a single radius, `count` capsules along the band for a ring.
/// Throws std::invalid_argument for count < 8, non-increasing or non-positive radii,
/// a radius list of size other than 1 or 2, or non-positive nodeRadius.
Cover makeNNodeBorderCover(Point center, std::span<const double> radii, double nodeRadius, int count);

/// New rect after dragging `handle` of `start` by `total`; the opposite edge stays put
/// and the size is clamped into limits. Strip handles translate.
Rect dragFrameHandle(const Rect& start, FrameHandle handle, Point total, const SizeLimits& limits);

} // namespace movekit
