#pragma once

#include <string>
#include <vector>

#include "movekit/element.hpp"

namespace movekit {

/// Any number of arbitrarily placed rectangles that always move together.
/// Not resizable.
class LinkedRectangles : public Element {
public:
    /// Throws std::invalid_argument for an empty list or a degenerate rect.
    explicit LinkedRectangles(std::vector<Rect> rects, std::vector<std::string> labels = {});

    const std::vector<Rect>& rects() const { return rects_; }

    std::string_view kind() const override { return "linked"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override;
    bool moveNode(const NodeDrag& /*drag*/) override { return false; }
    Rect bounds() const override { return boundsUnion(rects_); }
    LayoutRecord saveRecord() const override;
    /// Only the position is restored; the relative offsets are structural.
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override;
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    std::vector<Rect> rects_;
    std::vector<std::string> labels_;
    std::vector<Point> offsets_; // of each rect from the first, fixed at construction
};

} // namespace movekit
