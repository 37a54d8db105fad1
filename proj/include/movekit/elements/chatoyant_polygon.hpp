#pragma once

#include <optional>
#include <vector>

#include "movekit/element.hpp"

namespace movekit {

/// A polygon that exercises every kind of node: it is moved and rotated by any inner
/// point, reconfigured by any apex, moved whole by its center point, and zoomed by
/// any border point.
///
/// Cover layout for n vertices:
///   [0, n)        apex circles       freedom Any
///   n             center circle      freedom Any
///   [n+1, 2n+1)   edge capsules      freedom Any (edge i joins vertex i and i+1)
///   2n+1          body polygon       freedom None
class ChatoyantPolygon : public Element {
public:
    static constexpr double kApexRadius = 5.0;
    static constexpr double kCenterRadius = 5.0;
    static constexpr double kEdgeHalfWidth = 3.0;
    /// Zoom and apex moves that would shrink the circumradius below this are ignored.
    static constexpr double kMinCircumradius = 4.0;

    /// Throws std::invalid_argument unless the vertices form a strictly convex polygon.
    ChatoyantPolygon(Point center, std::vector<Point> vertices, Angle angle = {});

    /// Regular polygon with `count` vertices at `radius` from `center`, the first at `start`.
    static ChatoyantPolygon regular(Point center, double radius, int count, Angle start = {});

    Point center() const { return center_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    Angle angle() const { return angle_; }
    double circumradius() const;

    std::size_t centerNode() const { return vertices_.size(); }
    std::size_t edgeNode(std::size_t edge) const { return vertices_.size() + 1 + edge; }
    std::size_t bodyNode() const { return 2 * vertices_.size() + 1; }

    std::string_view kind() const override { return "polygon"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override;
    bool moveNode(const NodeDrag& drag) override;
    Rect bounds() const override { return boundsOf(vertices_); }
    bool canRotate(std::size_t /*node*/) const override { return true; }
    Point rotationPivot(std::size_t /*node*/) const override { return center_; }
    void onCatch(std::size_t node, PointerButton button) override;
    void onRelease() override { drag_.reset(); }
    LayoutRecord saveRecord() const override;
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override;
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    struct Drag {
        std::size_t node;
        Point center;
        std::vector<Point> vertices;
        Angle angle;
        Point total;
        Angle turn;
    };

    bool acceptVertices(const std::vector<Point>& candidate) const;

    Point center_;
    std::vector<Point> vertices_;
    Angle angle_;
    bool clockwise_;
    std::optional<Drag> drag_;
};

} // namespace movekit
