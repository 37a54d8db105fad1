#include "movekit/elements/framed_control.hpp"

#include "record_util.hpp"

namespace movekit {

FramedControl::FramedControl(Rect rect, SizeLimits limits, std::string payload, double frameWidth)
    : rect_(rect), limits_(limits), policy_(policyFromLimits(limits)), handles_(rectFrameHandles(policy_)),
      payload_(std::move(payload)), frameWidth_(frameWidth) {
    if (!rect.isFinite() || !(rect.w > 0) || !(rect.h > 0)) {
        throw std::invalid_argument("FramedControl: rect needs positive width and height");
    }
    if (!limits.admits(rect.size())) {
        throw std::invalid_argument("FramedControl: rect size outside the size limits");
    }
    if (!(frameWidth > 0)) {
        throw std::invalid_argument("FramedControl: frame width must be positive");
    }
}

bool FramedControl::setRect(const Rect& rect) {
    const Size clamped = limits_.clamp(rect.size());
    rect_ = {rect.x, rect.y, clamped.w, clamped.h};
    return clamped != rect.size();
}

Cover FramedControl::defineCover() const { return makeRectFrameCover(rect_, frameWidth_, policy_); }

void FramedControl::move(double dx, double dy) { rect_ = rect_.translated(dx, dy); }

void FramedControl::onCatch(std::size_t node, PointerButton /*button*/) { drag_ = Drag{node, rect_, {}}; }

bool FramedControl::moveNode(const NodeDrag& drag) {
    if (drag.button != PointerButton::Left || drag.node >= handles_.size()) {
        return false;
    }
    if (!drag_ || drag_->node != drag.node) {
        onCatch(drag.node, drag.button);
    }
    // Positions derive from the total displacement since the catch, so a clamped edge
    // resumes exactly where the pointer comes back.
    drag_->total += Point{drag.dx, drag.dy};
    const Rect next = dragFrameHandle(drag_->start, handles_[drag.node], drag_->total, limits_);
    if (next == rect_) {
        return false;
    }
    rect_ = next;
    return true;
}

LayoutRecord FramedControl::saveRecord() const { return detail::rectRecord(kind(), rect_); }

void FramedControl::restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) {
    if (setRect({record.x, record.y, record.w, record.h})) {
        warnings.push_back("'" + record.tag + "': size clamped to the control's limits");
    }
}

void FramedControl::render(RenderModel& model) const {
    model.rect(rect_, "control");
    if (!payload_.empty()) {
        model.text(payload_, rect_.center(), {}, "control-label");
    }
}

void FramedControl::checkInvariants(std::vector<std::string>& violations) const {
    if (!rect_.isFinite()) {
        violations.push_back("control '" + payload_ + "': non-finite rect");
    }
    if (!limits_.admits(rect_.size())) {
        violations.push_back("control '" + payload_ + "': size outside limits");
    }
}

} // namespace movekit
