#include "movekit/elements/group.hpp"

#include <array>
#include <limits>

#include "movekit/elements/text_box.hpp"
#include "record_util.hpp"

namespace movekit {

namespace {

const SizeLimits kUnbounded{{0, 0}, {std::numeric_limits<double>::max(), std::numeric_limits<double>::max()}};

constexpr double kFitTolerance = 1e-9;

} // namespace

Group::Group(Rect frame, std::string title, SizeLimits range, GroupLayoutRule rule,
             std::vector<std::string> childPayloads)
    : frame_(frame), title_(std::move(title)), range_(range), policy_(policyFromLimits(range)),
      handles_(rectBorderHandles(policy_)), rule_(std::move(rule)), payloads_(std::move(childPayloads)) {
    if (!rule_) {
        throw std::invalid_argument("Group: missing layout rule");
    }
    if (!frame.isFinite() || !range.admits(frame.size())) {
        throw std::invalid_argument("Group '" + title_ + "': frame size outside its range");
    }
    const std::array<Size, 5> probes{frame.size(), range.min, range.max, Size{range.min.w, range.max.h},
                                     Size{range.max.w, range.min.h}};
    for (const Size& s : probes) {
        const Rect probe{frame.x, frame.y, s.w, s.h};
        const std::vector<Rect> rects = rule_(probe);
        if (rects.size() != payloads_.size()) {
            throw std::invalid_argument("Group '" + title_ + "': layout rule returned the wrong number of rects");
        }
        for (const Rect& r : rects) {
            if (!(r.w > 0) || !(r.h > 0) || !probe.expanded(kFitTolerance).contains(r)) {
                throw std::invalid_argument("Group '" + title_ + "': layout rule places a control outside the frame");
            }
        }
    }
    children_ = layoutChildren(frame_);
}

std::vector<FramedControl> Group::layoutChildren(const Rect& frame) const {
    const std::vector<Rect> rects = rule_(frame);
    std::vector<FramedControl> out;
    out.reserve(rects.size());
    for (std::size_t i = 0; i < rects.size(); ++i) {
        out.emplace_back(rects[i], kUnbounded, payloads_[i]);
    }
    return out;
}

bool Group::setFrame(const Rect& frame) {
    const Size clamped = range_.clamp(frame.size());
    frame_ = {frame.x, frame.y, clamped.w, clamped.h};
    children_ = layoutChildren(frame_);
    return clamped != frame.size();
}

Cover Group::defineCover() const {
    Cover cover;
    for (const FramedControl& child : children_) {
        cover.add(CoverNode::rect(child.rect(), Freedom::None, Cursor::Default));
    }
    cover.append(makeRectBorderCover(frame_, kBorderHalfWidth, policy_));
    return cover;
}

void Group::move(double dx, double dy) {
    frame_ = frame_.translated(dx, dy);
    children_ = layoutChildren(frame_);
}

void Group::onCatch(std::size_t node, PointerButton /*button*/) { drag_ = Drag{node, frame_, {}}; }

bool Group::moveNode(const NodeDrag& drag) {
    if (drag.button != PointerButton::Left || drag.node < children_.size()) {
        return false;
    }
    const FrameHandle handle = handles_.at(drag.node - children_.size());
    if (!drag_ || drag_->node != drag.node) {
        onCatch(drag.node, drag.button);
    }
    drag_->total += Point{drag.dx, drag.dy};
    const Rect next = dragFrameHandle(drag_->start, handle, drag_->total, range_);
    if (next == frame_) {
        return false;
    }
    setFrame(next);
    return true;
}

LayoutRecord Group::saveRecord() const { return detail::rectRecord(kind(), frame_); }

void Group::restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) {
    if (setFrame({record.x, record.y, record.w, record.h})) {
        warnings.push_back("'" + record.tag + "': frame size clamped to the group's range");
    }
}

void Group::render(RenderModel& model) const {
    model.polygon({frame_.topLeft(), {frame_.right(), frame_.top()}, {frame_.right(), frame_.bottom()},
                   {frame_.left(), frame_.bottom()}},
                  "group");
    model.text(title_, {frame_.x + 8 + textBoxSize(title_).w / 2, frame_.y}, {}, "title");
    for (const FramedControl& child : children_) {
        child.render(model);
    }
}

void Group::checkInvariants(std::vector<std::string>& violations) const {
    if (!range_.admits(frame_.size())) {
        violations.push_back("group '" + title_ + "': frame outside its range");
    }
    const std::vector<Rect> expected = rule_(frame_);
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (!frame_.expanded(kFitTolerance).contains(children_[i].rect())) {
            violations.push_back("group '" + title_ + "': child outside frame");
        }
        if (children_[i].rect() != expected[i]) {
            violations.push_back("group '" + title_ + "': child not at its layout-rule position");
        }
    }
}

} // namespace movekit
