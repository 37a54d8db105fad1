#include "movekit/elements/chatoyant_polygon.hpp"

#include <algorithm>
#include <string>

#include "record_util.hpp"

namespace movekit {

namespace {

double maxDistance(Point c, const std::vector<Point>& points) {
    double r = 0.0;
    for (const Point& p : points) {
        r = std::max(r, distance(c, p));
    }
    return r;
}

} // namespace

ChatoyantPolygon::ChatoyantPolygon(Point center, std::vector<Point> vertices, Angle angle)
    : center_(center), vertices_(std::move(vertices)), angle_(angle) {
    if (!center.isFinite() || !isStrictlyConvex(vertices_)) {
        throw std::invalid_argument("ChatoyantPolygon: vertices must form a strictly convex polygon");
    }
    clockwise_ = signedArea2(vertices_) > 0;
}

ChatoyantPolygon ChatoyantPolygon::regular(Point center, double radius, int count, Angle start) {
    if (count < 3 || !(radius > 0)) {
        throw std::invalid_argument("ChatoyantPolygon::regular: needs >= 3 vertices and a positive radius");
    }
    std::vector<Point> v;
    for (int k = 0; k < count; ++k) {
        const double a = start.radians + 2 * std::numbers::pi * k / count;
        v.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    return ChatoyantPolygon(center, std::move(v));
}

double ChatoyantPolygon::circumradius() const { return maxDistance(center_, vertices_); }

Cover ChatoyantPolygon::defineCover() const {
    const std::size_t n = vertices_.size();
    Cover cover;
    for (const Point& v : vertices_) {
        cover.add(CoverNode::circle(v, kApexRadius, Freedom::Any, Cursor::Hand));
    }
    cover.add(CoverNode::circle(center_, kCenterRadius, Freedom::Any, Cursor::MoveAll));
    for (std::size_t i = 0; i < n; ++i) {
        cover.add(CoverNode::capsule(vertices_[i], vertices_[(i + 1) % n], kEdgeHalfWidth, Freedom::Any,
                                     Cursor::SizeAll));
    }
    cover.add(CoverNode::polygon(vertices_, Freedom::None, Cursor::MoveAll));
    return cover;
}

void ChatoyantPolygon::move(double dx, double dy) {
    const Point d{dx, dy};
    center_ += d;
    for (Point& v : vertices_) {
        v += d;
    }
}

void ChatoyantPolygon::onCatch(std::size_t node, PointerButton /*button*/) {
    drag_ = Drag{node, center_, vertices_, angle_, {}, {}};
}

bool ChatoyantPolygon::acceptVertices(const std::vector<Point>& candidate) const {
    return isStrictlyConvex(candidate) && (signedArea2(candidate) > 0) == clockwise_ &&
           maxDistance(center_, candidate) >= kMinCircumradius;
}

bool ChatoyantPolygon::moveNode(const NodeDrag& drag) {
    const std::size_t n = vertices_.size();
    if (drag.node >= bodyNode() + 1) {
        return false;
    }
    if (!drag_ || drag_->node != drag.node) {
        onCatch(drag.node, drag.button);
    }
    const std::vector<Point> before = vertices_;
    const Point centerBefore = center_;

    if (drag.button == PointerButton::Right) {
        // Rotation is always re-derived from the shape at catch time.
        drag_->turn = drag_->turn + drag.turn;
        for (std::size_t i = 0; i < n; ++i) {
            vertices_[i] = rotatePoint(drag_->vertices[i], drag.pivot, drag_->turn);
        }
        center_ = rotatePoint(drag_->center, drag.pivot, drag_->turn);
        const Angle angleBefore = angle_;
        angle_ = drag_->angle + drag_->turn;
        return vertices_ != before || center_ != centerBefore || angle_.radians != angleBefore.radians;
    }

    drag_->total += Point{drag.dx, drag.dy};
    const Point total = drag_->total;

    if (drag.node < n) {
        std::vector<Point> candidate = drag_->vertices;
        candidate[drag.node] = drag_->vertices[drag.node] + total;
        if (!acceptVertices(candidate)) {
            return false;
        }
        vertices_ = std::move(candidate);
    } else if (drag.node == centerNode()) {
        center_ = drag_->center + total;
        for (std::size_t i = 0; i < n; ++i) {
            vertices_[i] = drag_->vertices[i] + total;
        }
    } else if (drag.node < bodyNode()) {
        // Zoom about the center by the ratio of pointer distances (now vs. catch).
        const Point c = drag_->center;
        const Point grab = drag.pointer - total;
        const double from = distance(grab, c);
        if (from < 1e-9) {
            return false;
        }
        const double factor = distance(drag.pointer, c) / from;
        if (maxDistance(c, drag_->vertices) * factor < kMinCircumradius) {
            return false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            vertices_[i] = c + (drag_->vertices[i] - c) * factor;
        }
    } else {
        return false;
    }
    return vertices_ != before || center_ != centerBefore;
}

LayoutRecord ChatoyantPolygon::saveRecord() const {
    const Rect box = bounds();
    LayoutRecord rec;
    rec.kind = std::string(kind());
    rec.x = center_.x;
    rec.y = center_.y;
    rec.w = box.w;
    rec.h = box.h;
    rec.angle = angle_.radians;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        rec.children.push_back(detail::pointRecord("v" + std::to_string(i), "vertex", vertices_[i]));
    }
    return rec;
}

void ChatoyantPolygon::restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) {
    const Point center{record.x, record.y};
    std::vector<Point> vertices;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const LayoutRecord* v = record.child("v" + std::to_string(i));
        if (v == nullptr) {
            break;
        }
        vertices.push_back({v->x, v->y});
    }
    const Point oldCenter = center_;
    center_ = center;
    angle_ = {record.angle};
    if (vertices.size() == vertices_.size() && acceptVertices(vertices)) {
        vertices_ = std::move(vertices);
    } else {
        warnings.push_back("'" + record.tag + "': vertex records missing or invalid; shape kept");
        const Point d = center - oldCenter;
        for (Point& v : vertices_) {
            v += d;
        }
    }
}

void ChatoyantPolygon::render(RenderModel& model) const {
    model.polygon(vertices_, "polygon");
    model.circle(center_, kCenterRadius, "polygon-center");
    for (const Point& v : vertices_) {
        model.circle(v, kApexRadius, "polygon-apex");
    }
}

void ChatoyantPolygon::checkInvariants(std::vector<std::string>& violations) const {
    if (vertices_.size() < 3 || !isStrictlyConvex(vertices_)) {
        violations.push_back("polygon: not strictly convex");
    } else if ((signedArea2(vertices_) > 0) != clockwise_) {
        violations.push_back("polygon: winding flipped");
    }
    if (!center_.isFinite() || !std::isfinite(angle_.radians)) {
        violations.push_back("polygon: non-finite center or angle");
    }
}

} // namespace movekit
