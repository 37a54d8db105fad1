#include "movekit/cover.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace movekit {

std::string_view toString(Freedom f) {
    switch (f) {
    case Freedom::Any: return "Any";
    case Freedom::NS: return "NS";
    case Freedom::WE: return "WE";
    case Freedom::None: return "None";
    }
    return "?";
}

namespace {

constexpr std::array<std::pair<Cursor, std::string_view>, 9> kCursorNames{{
    {Cursor::Default, "Default"},
    {Cursor::MoveAll, "MoveAll"},
    {Cursor::SizeNS, "SizeNS"},
    {Cursor::SizeWE, "SizeWE"},
    {Cursor::SizeNWSE, "SizeNWSE"},
    {Cursor::SizeNESW, "SizeNESW"},
    {Cursor::SizeAll, "SizeAll"},
    {Cursor::Rotate, "Rotate"},
    {Cursor::Hand, "Hand"},
}};

} // namespace

std::string_view toString(Cursor c) {
    for (const auto& [cursor, name] : kCursorNames) {
        if (cursor == c) {
            return name;
        }
    }
    return "?";
}

std::optional<Cursor> cursorFromString(std::string_view name) {
    for (const auto& [cursor, n] : kCursorNames) {
        if (n == name) {
            return cursor;
        }
    }
    return std::nullopt;
}

std::string_view toString(ResizePolicy policy) {
    switch (policy) {
    case ResizePolicy::NoResize: return "NoResize";
    case ResizePolicy::WEOnly: return "WEOnly";
    case ResizePolicy::NSOnly: return "NSOnly";
    case ResizePolicy::Full: return "Full";
    }
    return "?";
}

void validateShape(const NodeShape& shape) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                if (!s.center.isFinite() || !(s.radius > 0) || !std::isfinite(s.radius)) {
                    throw std::invalid_argument("circle node needs a finite center and positive radius");
                }
            } else if constexpr (std::is_same_v<T, Capsule>) {
                if (!s.p1.isFinite() || !s.p2.isFinite() || !(s.halfWidth > 0) || !std::isfinite(s.halfWidth)) {
                    throw std::invalid_argument("capsule node needs finite ends and positive half width");
                }
            } else {
                if (!isStrictlyConvex(s.vertices)) {
                    throw std::invalid_argument(
                        "polygon node needs >= 3 vertices forming a convex polygon with nonzero area");
                }
            }
        },
        shape);
}

bool shapeContains(const NodeShape& shape, Point p) {
    return std::visit(
        [p](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return distance(p, s.center) <= s.radius;
            } else if constexpr (std::is_same_v<T, Capsule>) {
                return distPointSegment(p, s.p1, s.p2) <= s.halfWidth;
            } else {
                return pointInConvexPolygon(p, s.vertices);
            }
        },
        shape);
}

NodeShape translatedShape(const NodeShape& shape, Point delta) {
    return std::visit(
        [delta](const auto& s) -> NodeShape {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return Circle{s.center + delta, s.radius};
            } else if constexpr (std::is_same_v<T, Capsule>) {
                return Capsule{s.p1 + delta, s.p2 + delta, s.halfWidth};
            } else {
                ConvexPolygon out = s;
                for (Point& v : out.vertices) {
                    v += delta;
                }
                return out;
            }
        },
        shape);
}

CoverNode::CoverNode(NodeShape shape, Freedom freedom, Cursor cursor)
    : shape_(std::move(shape)), freedom_(freedom), cursor_(cursor) {
    validateShape(shape_);
}

CoverNode CoverNode::circle(Point center, double radius, Freedom freedom, Cursor cursor) {
    return {Circle{center, radius}, freedom, cursor};
}

CoverNode CoverNode::capsule(Point p1, Point p2, double halfWidth, Freedom freedom, Cursor cursor) {
    return {Capsule{p1, p2, halfWidth}, freedom, cursor};
}

CoverNode CoverNode::polygon(std::vector<Point> vertices, Freedom freedom, Cursor cursor) {
    return {ConvexPolygon{std::move(vertices)}, freedom, cursor};
}

CoverNode CoverNode::rect(const Rect& r, Freedom freedom, Cursor cursor) {
    return polygon({{r.left(), r.top()}, {r.right(), r.top()}, {r.right(), r.bottom()}, {r.left(), r.bottom()}},
                   freedom, cursor);
}

void Cover::append(const Cover& other) {
    nodes_.insert(nodes_.end(), other.nodes_.begin(), other.nodes_.end());
}

std::optional<std::size_t> Cover::hit(Point p) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].contains(p)) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<Cursor> Cover::cursorAt(Point p) const {
    if (auto i = hit(p)) {
        return nodes_[*i].cursor();
    }
    return std::nullopt;
}

Size SizeLimits::clamp(Size s) const {
    return {std::clamp(s.w, min.w, max.w), std::clamp(s.h, min.h, max.h)};
}

ResizePolicy policyFromLimits(const SizeLimits& limits) {
    if (limits.min.w < 0 || limits.min.h < 0 || limits.min.w > limits.max.w || limits.min.h > limits.max.h) {
        throw std::invalid_argument("size limits need 0 <= min <= max on both axes");
    }
    const bool we = limits.min.w < limits.max.w;
    const bool ns = limits.min.h < limits.max.h;
    if (we && ns) {
        return ResizePolicy::Full;
    }
    if (we) {
        return ResizePolicy::WEOnly;
    }
    if (ns) {
        return ResizePolicy::NSOnly;
    }
    return ResizePolicy::NoResize;
}

namespace {

constexpr std::array<FrameHandle, 4> kCorners{FrameHandle::TopLeft, FrameHandle::TopRight,
                                              FrameHandle::BottomRight, FrameHandle::BottomLeft};

std::vector<FrameHandle> resizeHandles(ResizePolicy policy) {
    std::vector<FrameHandle> out;
    if (policy == ResizePolicy::Full) {
        out.assign(kCorners.begin(), kCorners.end());
    }
    const bool ns = policy == ResizePolicy::Full || policy == ResizePolicy::NSOnly;
    const bool we = policy == ResizePolicy::Full || policy == ResizePolicy::WEOnly;
    if (ns && we) {
        out.insert(out.end(), {FrameHandle::Top, FrameHandle::Right, FrameHandle::Bottom, FrameHandle::Left});
    } else if (ns) {
        out.insert(out.end(), {FrameHandle::Top, FrameHandle::Bottom});
    } else if (we) {
        out.insert(out.end(), {FrameHandle::Right, FrameHandle::Left});
    }
    return out;
}

Freedom handleFreedom(FrameHandle h) {
    switch (h) {
    case FrameHandle::Top:
    case FrameHandle::Bottom: return Freedom::NS;
    case FrameHandle::Left:
    case FrameHandle::Right: return Freedom::WE;
    case FrameHandle::Strip: return Freedom::None;
    default: return Freedom::Any;
    }
}

Cursor handleCursor(FrameHandle h) {
    switch (h) {
    case FrameHandle::TopLeft:
    case FrameHandle::BottomRight: return Cursor::SizeNWSE;
    case FrameHandle::TopRight:
    case FrameHandle::BottomLeft: return Cursor::SizeNESW;
    case FrameHandle::Top:
    case FrameHandle::Bottom: return Cursor::SizeNS;
    case FrameHandle::Left:
    case FrameHandle::Right: return Cursor::SizeWE;
    case FrameHandle::Strip: return Cursor::MoveAll;
    }
    return Cursor::Default;
}

void requireRect(const Rect& rect, double width, const char* what) {
    if (!rect.isFinite() || !(rect.w > 0) || !(rect.h > 0)) {
        throw std::invalid_argument(std::string(what) + ": rect needs positive width and height");
    }
    if (!(width > 0) || !std::isfinite(width)) {
        throw std::invalid_argument(std::string(what) + ": frame width must be positive");
    }
}

} // namespace

std::vector<FrameHandle> rectFrameHandles(ResizePolicy policy) {
    auto out = resizeHandles(policy);
    out.insert(out.end(), 4, FrameHandle::Strip);
    return out;
}

double midNodeLength(double side) { return std::clamp(side / 4, 16.0, 60.0); }

Cover makeRectFrameCover(const Rect& rect, double frameWidth, ResizePolicy policy) {
    requireRect(rect, frameWidth, "makeRectFrameCover");
    const double fw = frameWidth;
    const double l = rect.left(), t = rect.top(), r = rect.right(), b = rect.bottom();
    const Point c = rect.center();

    // Mid-side nodes are centered on their side and clipped to the side's extent
    // so they never reach into the corner cells.
    auto horizontalSpan = [&](double len) {
        return std::pair{std::max(l, c.x - len / 2), std::min(r, c.x + len / 2)};
    };
    auto verticalSpan = [&](double len) {
        return std::pair{std::max(t, c.y - len / 2), std::min(b, c.y + len / 2)};
    };

    Cover cover;
    for (FrameHandle h : resizeHandles(policy)) {
        Rect cell;
        switch (h) {
        case FrameHandle::TopLeft: cell = Rect::fromEdges(l - fw, t - fw, l, t); break;
        case FrameHandle::TopRight: cell = Rect::fromEdges(r, t - fw, r + fw, t); break;
        case FrameHandle::BottomRight: cell = Rect::fromEdges(r, b, r + fw, b + fw); break;
        case FrameHandle::BottomLeft: cell = Rect::fromEdges(l - fw, b, l, b + fw); break;
        case FrameHandle::Top: {
            auto [x0, x1] = horizontalSpan(midNodeLength(rect.w));
            cell = Rect::fromEdges(x0, t - fw, x1, t);
            break;
        }
        case FrameHandle::Bottom: {
            auto [x0, x1] = horizontalSpan(midNodeLength(rect.w));
            cell = Rect::fromEdges(x0, b, x1, b + fw);
            break;
        }
        case FrameHandle::Left: {
            auto [y0, y1] = verticalSpan(midNodeLength(rect.h));
            cell = Rect::fromEdges(l - fw, y0, l, y1);
            break;
        }
        case FrameHandle::Right: {
            auto [y0, y1] = verticalSpan(midNodeLength(rect.h));
            cell = Rect::fromEdges(r, y0, r + fw, y1);
            break;
        }
        case FrameHandle::Strip: break;
        }
        cover.add(CoverNode::rect(cell, handleFreedom(h), handleCursor(h)));
    }
    // Top and bottom strips span the full outer width; left and right fill the gap between them.
    for (const Rect& strip : {Rect::fromEdges(l - fw, t - fw, r + fw, t), Rect::fromEdges(r, t, r + fw, b),
                              Rect::fromEdges(l - fw, b, r + fw, b + fw), Rect::fromEdges(l - fw, t, l, b)}) {
        cover.add(CoverNode::rect(strip, Freedom::None, Cursor::MoveAll));
    }
    return cover;
}

std::vector<FrameHandle> rectBorderHandles(ResizePolicy policy) {
    auto out = resizeHandles(policy);
    out.push_back(FrameHandle::Strip);
    return out;
}

Cover makeRectBorderCover(const Rect& rect, double halfWidth, ResizePolicy policy) {
    requireRect(rect, halfWidth, "makeRectBorderCover");
    const double hw = halfWidth;
    const double l = rect.left(), t = rect.top(), r = rect.right(), b = rect.bottom();
    Cover cover;
    for (FrameHandle h : resizeHandles(policy)) {
        Rect cell;
        switch (h) {
        case FrameHandle::TopLeft: cell = Rect::fromEdges(l - hw, t - hw, l + hw, t + hw); break;
        case FrameHandle::TopRight: cell = Rect::fromEdges(r - hw, t - hw, r + hw, t + hw); break;
        case FrameHandle::BottomRight: cell = Rect::fromEdges(r - hw, b - hw, r + hw, b + hw); break;
        case FrameHandle::BottomLeft: cell = Rect::fromEdges(l - hw, b - hw, l + hw, b + hw); break;
        case FrameHandle::Top: cell = Rect::fromEdges(l, t - hw, r, t + hw); break;
        case FrameHandle::Bottom: cell = Rect::fromEdges(l, b - hw, r, b + hw); break;
        case FrameHandle::Left: cell = Rect::fromEdges(l - hw, t, l + hw, b); break;
        case FrameHandle::Right: cell = Rect::fromEdges(r - hw, t, r + hw, b); break;
        case FrameHandle::Strip: break;
        }
        cover.add(CoverNode::rect(cell, handleFreedom(h), handleCursor(h)));
    }
    cover.add(CoverNode::rect(rect, Freedom::None, Cursor::MoveAll));
    return cover;
}

Cover makeNNodeBorderCover(Point center, std::span<const double> radii, double nodeRadius, int count) {
    if (count < 8) {
        throw std::invalid_argument("makeNNodeBorderCover: count must be at least 8");
    }
    if (radii.empty() || radii.size() > 2) {
        throw std::invalid_argument("makeNNodeBorderCover: expected one radius (disc) or two (ring)");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0) || !std::isfinite(radii[i]) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw std::invalid_argument("makeNNodeBorderCover: radii must be positive and strictly increasing");
        }
    }
    if (!(nodeRadius > 0)) {
        throw std::invalid_argument("makeNNodeBorderCover: node radius must be positive");
    }
    requireFinite(center, "makeNNodeBorderCover");

    auto onCircle = [&](double radius, int k) {
        const double a = 2 * std::numbers::pi * k / count;
        return Point{center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
    };

    Cover cover;
    for (double radius : radii) {
        for (int k = 0; k < count; ++k) {
            cover.add(CoverNode::circle(onCircle(radius, k), nodeRadius, Freedom::Any, Cursor::SizeAll));
        }
    }
    if (radii.size() == 1) {
        cover.add(CoverNode::circle(center, radii[0], Freedom::None, Cursor::MoveAll));
    } else {
        const double mid = (radii[0] + radii[1]) / 2;
        const double half = (radii[1] - radii[0]) / 2;
        for (int k = 0; k < count; ++k) {
            cover.add(CoverNode::capsule(onCircle(mid, k), onCircle(mid, k + 1), half, Freedom::None,
                                         Cursor::MoveAll));
        }
    }
    return cover;
}

Rect dragFrameHandle(const Rect& start, FrameHandle handle, Point total, const SizeLimits& limits) {
    if (handle == FrameHandle::Strip) {
        return start.translated(total.x, total.y);
    }
    const bool left = handle == FrameHandle::Left || handle == FrameHandle::TopLeft || handle == FrameHandle::BottomLeft;
    const bool right =
        handle == FrameHandle::Right || handle == FrameHandle::TopRight || handle == FrameHandle::BottomRight;
    const bool top = handle == FrameHandle::Top || handle == FrameHandle::TopLeft || handle == FrameHandle::TopRight;
    const bool bottom =
        handle == FrameHandle::Bottom || handle == FrameHandle::BottomLeft || handle == FrameHandle::BottomRight;

    Rect out = start;
    if (left) {
        out.w = std::clamp(start.right() - (start.left() + total.x), limits.min.w, limits.max.w);
        out.x = start.right() - out.w;
    } else if (right) {
        out.w = std::clamp(start.w + total.x, limits.min.w, limits.max.w);
    }
    if (top) {
        out.h = std::clamp(start.bottom() - (start.top() + total.y), limits.min.h, limits.max.h);
        out.y = start.bottom() - out.h;
    } else if (bottom) {
        out.h = std::clamp(start.h + total.y, limits.min.h, limits.max.h);
    }
    return out;
}

} // namespace movekit
