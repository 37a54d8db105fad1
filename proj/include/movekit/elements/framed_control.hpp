#pragma once

#include <optional>
#include <string>
#include <vector>

#include "movekit/element.hpp"

namespace movekit {

/// A control-like rectangle whose interior is left to the host (clicks, typing) and
/// whose surrounding frame band moves and resizes it. Size stays within the limits.
class FramedControl : public Element {
public:
    /// Throws std::invalid_argument when the rect is degenerate or outside the limits.
    FramedControl(Rect rect, SizeLimits limits, std::string payload = {}, double frameWidth = kDefaultFrameWidth);

    const Rect& rect() const { return rect_; }
    const SizeLimits& limits() const { return limits_; }
    ResizePolicy policy() const { return policy_; }
    const std::string& payload() const { return payload_; }
    double frameWidth() const { return frameWidth_; }

    /// Sets the rect with its size clamped into the limits; returns true if clamping was needed.
    bool setRect(const Rect& rect);

    std::string_view kind() const override { return "control"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override;
    bool moveNode(const NodeDrag& drag) override;
    Rect bounds() const override { return rect_; }
    void onCatch(std::size_t node, PointerButton button) override;
    void onRelease() override { drag_.reset(); }
    void resizeTo(const Rect& rect) override { setRect(rect); }
    LayoutRecord saveRecord() const override;
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override;
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    struct Drag {
        std::size_t node;
        Rect start;
        Point total;
    };

    Rect rect_;
    SizeLimits limits_;
    ResizePolicy policy_;
    std::vector<FrameHandle> handles_;
    std::string payload_;
    double frameWidth_;
    std::optional<Drag> drag_;
};

} // namespace movekit
