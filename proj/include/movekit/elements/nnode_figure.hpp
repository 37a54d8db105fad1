#pragma once

#include <optional>
#include <vector>

#include "movekit/element.hpp"

namespace movekit {

/// A disc (one radius) or ring (two radii) covered by an N-node border: every border
/// circle node resizes its radius, the body moves the figure.
class NNodeFigure : public Element {
public:
    static constexpr double kMinRadius = 8.0;
    /// Smallest allowed distance between the inner and outer radius of a ring.
    static constexpr double kMinRingWidth = 8.0;

    /// Throws std::invalid_argument under the same conditions as makeNNodeBorderCover,
    /// or when a radius violates the minimums above.
    NNodeFigure(Point center, std::vector<double> radii, int count = 24, double nodeRadius = 4.0);

    Point center() const { return center_; }
    const std::vector<double>& radii() const { return radii_; }
    int count() const { return count_; }
    bool isRing() const { return radii_.size() == 2; }

    std::string_view kind() const override { return isRing() ? "ring" : "disc"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override { center_ += Point{dx, dy}; }
    bool moveNode(const NodeDrag& drag) override;
    Rect bounds() const override;
    void onCatch(std::size_t node, PointerButton button) override;
    void onRelease() override { drag_.reset(); }
    LayoutRecord saveRecord() const override;
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override;
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    /// Clamps radius `index` against the minimums and the other radius.
    double clampRadius(std::size_t index, double r) const;

    struct Drag {
        std::size_t node;
        double radius;
        Point total;
    };

    Point center_;
    std::vector<double> radii_;
    int count_;
    double nodeRadius_;
    std::optional<Drag> drag_;
};

} // namespace movekit
