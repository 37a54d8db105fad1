#include "movekit/elements/commented_control.hpp"

#include "movekit/elements/text_box.hpp"
#include "record_util.hpp"

namespace movekit {

CommentedControl::CommentedControl(FramedControl control, std::string text, Point anchor, Angle angle)
    : control_(std::move(control)), text_(std::move(text)), anchor_(anchor), angle_(angle) {
    if (!anchor.isFinite() || !std::isfinite(angle.radians)) {
        throw std::invalid_argument("CommentedControl: non-finite anchor or angle");
    }
}

Point CommentedControl::textCenter() const {
    const Rect& r = control_.rect();
    return {r.x + anchor_.x * r.w, r.y + anchor_.y * r.h};
}

std::array<Point, 4> CommentedControl::textCorners() const { return textBoxCorners(text_, textCenter(), angle_); }

Cover CommentedControl::defineCover() const {
    const auto corners = textCorners();
    Cover cover;
    cover.add(CoverNode::polygon({corners.begin(), corners.end()}, Freedom::Any, Cursor::Hand));
    cover.append(control_.defineCover());
    return cover;
}

Point CommentedControl::rotationPivot(std::size_t node) const {
    return node == 0 ? textCenter() : Element::rotationPivot(node);
}

void CommentedControl::onCatch(std::size_t node, PointerButton button) {
    if (node == 0) {
        textDragTotal_ = Point{};
        textDragStart_ = anchor_;
    } else {
        control_.onCatch(node - 1, button);
    }
}

void CommentedControl::onRelease() {
    textDragTotal_.reset();
    control_.onRelease();
}

bool CommentedControl::moveNode(const NodeDrag& drag) {
    if (drag.node != 0) {
        NodeDrag inner = drag;
        inner.node = drag.node - 1;
        return control_.moveNode(inner);
    }
    if (drag.button == PointerButton::Right) {
        if (drag.turn.radians == 0.0) {
            return false;
        }
        angle_ = angle_ + drag.turn;
        return true;
    }
    if (!textDragTotal_) {
        onCatch(0, drag.button);
    }
    *textDragTotal_ += Point{drag.dx, drag.dy};
    const Rect& r = control_.rect();
    const Point next{textDragStart_.x + textDragTotal_->x / r.w, textDragStart_.y + textDragTotal_->y / r.h};
    if (next == anchor_) {
        return false;
    }
    anchor_ = next;
    return true;
}

Rect CommentedControl::bounds() const {
    const auto corners = textCorners();
    const std::array<Rect, 2> parts{control_.rect(), boundsOf(corners)};
    return boundsUnion(parts);
}

LayoutRecord CommentedControl::saveRecord() const {
    LayoutRecord rec = control_.saveRecord();
    rec.kind = std::string(kind());
    rec.children.push_back(detail::pointRecord("text", "comment", anchor_, angle_.radians));
    return rec;
}

void CommentedControl::restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) {
    control_.restoreRecord(record, warnings);
    if (const LayoutRecord* text = record.child("text")) {
        anchor_ = {text->x, text->y};
        angle_ = {text->angle};
    }
}

void CommentedControl::render(RenderModel& model) const {
    control_.render(model);
    model.text(text_, textCenter(), angle_, "comment");
}

void CommentedControl::checkInvariants(std::vector<std::string>& violations) const {
    control_.checkInvariants(violations);
    if (!anchor_.isFinite() || !std::isfinite(angle_.radians)) {
        violations.push_back("commented control '" + text_ + "': non-finite comment placement");
    }
}

} // namespace movekit
