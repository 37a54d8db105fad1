#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "movekit/elements/framed_control.hpp"

namespace movekit {

/// Maps a frame rect to the rects of the group's inner controls.
using GroupLayoutRule = std::function<std::vector<Rect>(const Rect& frame)>;

/// A titled frame whose inner controls are positioned by a layout rule. The group is
/// moved by any inner point not occupied by a control and resized by its border
/// within `range`; the resize directions follow the range as for controls.
///
/// Cover: one shield node per inner control (catches nothing), then the border
/// resize nodes, then the body.
class Group : public Element {
public:
    /// Throws std::invalid_argument when the frame is outside `range` or the rule places
    /// a control outside the frame at the current size or at any corner of the range.
    Group(Rect frame, std::string title, SizeLimits range, GroupLayoutRule rule,
          std::vector<std::string> childPayloads);

    const Rect& frame() const { return frame_; }
    const std::string& title() const { return title_; }
    const SizeLimits& range() const { return range_; }
    ResizePolicy policy() const { return policy_; }
    const std::vector<FramedControl>& children() const { return children_; }

    /// Clamps the size into the range and re-lays the children. Returns true if clamped.
    bool setFrame(const Rect& frame);

    /// Border half width of the resize nodes.
    static constexpr double kBorderHalfWidth = 4.0;

    std::string_view kind() const override { return "group"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override;
    bool moveNode(const NodeDrag& drag) override;
    Rect bounds() const override { return frame_; }
    bool acceptsCatch(std::size_t node) const override { return node >= children_.size(); }
    void onCatch(std::size_t node, PointerButton button) override;
    void onRelease() override { drag_.reset(); }
    void resizeTo(const Rect& rect) override { setFrame(rect); }
    LayoutRecord saveRecord() const override;
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override;
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    std::vector<FramedControl> layoutChildren(const Rect& frame) const;

    struct Drag {
        std::size_t node;
        Rect start;
        Point total;
    };

    Rect frame_;
    std::string title_;
    SizeLimits range_;
    ResizePolicy policy_;
    std::vector<FrameHandle> handles_;
    GroupLayoutRule rule_;
    std::vector<std::string> payloads_;
    std::vector<FramedControl> children_;
    std::optional<Drag> drag_;
};

} // namespace movekit
