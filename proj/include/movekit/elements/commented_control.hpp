#pragma once

#include <array>
#include <optional>
#include <string>

#include "movekit/elements/framed_control.hpp"

namespace movekit {

/// A framed control paired with a painted comment. The comment is placed by a
/// fractional anchor relative to the control rect, so it keeps its relative
/// position when the pair moves or the control is resized. The comment can be
/// moved by any of its points and rotated about its own center.
///
/// Cover: node 0 is the comment; nodes 1.. are the control's frame nodes.
class CommentedControl : public Element {
public:
    /// `anchor` is the comment center in units of the control size, measured from its top-left corner.
    CommentedControl(FramedControl control, std::string text, Point anchor, Angle angle = {});

    const FramedControl& control() const { return control_; }
    const std::string& text() const { return text_; }
    Point anchor() const { return anchor_; }
    Angle textAngle() const { return angle_; }

    /// Absolute center of the comment.
    Point textCenter() const;
    std::array<Point, 4> textCorners() const;

    std::string_view kind() const override { return "commented"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override { control_.move(dx, dy); }
    bool moveNode(const NodeDrag& drag) override;
    Rect bounds() const override;
    bool canRotate(std::size_t node) const override { return node == 0; }
    Point rotationPivot(std::size_t node) const override;
    void onCatch(std::size_t node, PointerButton button) override;
    void onRelease() override;
    LayoutRecord saveRecord() const override;
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override;
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    FramedControl control_;
    std::string text_;
    Point anchor_;
    Angle angle_;
    std::optional<Point> textDragTotal_;
    Point textDragStart_;
};

} // namespace movekit
