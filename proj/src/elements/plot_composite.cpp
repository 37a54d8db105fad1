#include "movekit/elements/plot_composite.hpp"

#include <string>

#include "movekit/elements/text_box.hpp"
#include "record_util.hpp"

namespace movekit {

PlotComposite::PlotComposite(Rect area, SizeLimits areaLimits, std::vector<ScaleSpec> scales,
                             std::vector<PlotComment> comments, std::string title)
    : area_(area), areaLimits_(areaLimits), policy_(policyFromLimits(areaLimits)),
      handles_(rectBorderHandles(policy_)), scales_(std::move(scales)), comments_(std::move(comments)),
      title_(std::move(title)) {
    if (!area.isFinite() || !(area.w > 0) || !(area.h > 0) || !areaLimits.admits(area.size())) {
        throw std::invalid_argument("PlotComposite: area size outside its limits");
    }
    if (!(areaLimits.min.w > 0) || !(areaLimits.min.h > 0)) {
        throw std::invalid_argument("PlotComposite: area limits must keep a positive size");
    }
    for (const ScaleSpec& s : scales_) {
        if (!(s.thickness > 0) || !s.offset.isFinite()) {
            throw std::invalid_argument("PlotComposite: scale needs a positive thickness");
        }
    }
    for (const PlotComment& c : comments_) {
        if (c.owner >= static_cast<int>(scales_.size()) || c.owner < -1 || !c.anchor.isFinite()) {
            throw std::invalid_argument("PlotComposite: comment '" + c.text + "' has an invalid owner or anchor");
        }
    }
}

Rect PlotComposite::scaleRect(std::size_t i) const {
    const ScaleSpec& s = scales_.at(i);
    const Rect& a = area_;
    switch (s.side) {
    case Side::Bottom: return {a.x + s.offset.x, a.bottom() + s.offset.y, a.w, s.thickness};
    case Side::Top: return {a.x + s.offset.x, a.y - s.thickness + s.offset.y, a.w, s.thickness};
    case Side::Left: return {a.x - s.thickness + s.offset.x, a.y + s.offset.y, s.thickness, a.h};
    case Side::Right: return {a.right() + s.offset.x, a.y + s.offset.y, s.thickness, a.h};
    }
    return a;
}

Rect PlotComposite::ownerRect(int owner) const {
    return owner < 0 ? area_ : scaleRect(static_cast<std::size_t>(owner));
}

Point PlotComposite::commentCenter(std::size_t i) const {
    const PlotComment& c = comments_.at(i);
    const Rect r = ownerRect(c.owner);
    return {r.x + c.anchor.x * r.w, r.y + c.anchor.y * r.h};
}

std::array<Point, 4> PlotComposite::commentCorners(std::size_t i) const {
    return textBoxCorners(comments_.at(i).text, commentCenter(i), comments_[i].angle);
}

Cover PlotComposite::defineCover() const {
    Cover cover;
    for (std::size_t i = 0; i < comments_.size(); ++i) {
        const auto corners = commentCorners(i);
        cover.add(CoverNode::polygon({corners.begin(), corners.end()}, Freedom::Any, Cursor::Hand));
    }
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        cover.add(CoverNode::rect(scaleRect(i), Freedom::Any, Cursor::MoveAll));
    }
    cover.append(makeRectBorderCover(area_, kBorderHalfWidth, policy_));
    return cover;
}

Point PlotComposite::rotationPivot(std::size_t node) const {
    return node < comments_.size() ? commentCenter(node) : Element::rotationPivot(node);
}

void PlotComposite::onCatch(std::size_t node, PointerButton /*button*/) {
    Point point;
    if (node < comments_.size()) {
        point = comments_[node].anchor;
    } else if (node < firstAreaNode()) {
        point = scales_[node - firstScaleNode()].offset;
    }
    drag_ = Drag{node, area_, point, {}};
}

bool PlotComposite::moveNode(const NodeDrag& drag) {
    if (!drag_ || drag_->node != drag.node) {
        onCatch(drag.node, drag.button);
    }
    if (drag.node < comments_.size()) {
        PlotComment& c = comments_[drag.node];
        if (drag.button == PointerButton::Right) {
            if (drag.turn.radians == 0.0) {
                return false;
            }
            c.angle = c.angle + drag.turn;
            return true;
        }
        drag_->total += Point{drag.dx, drag.dy};
        const Rect owner = ownerRect(c.owner);
        const Point next{drag_->point.x + drag_->total.x / owner.w, drag_->point.y + drag_->total.y / owner.h};
        if (next == c.anchor) {
            return false;
        }
        c.anchor = next;
        return true;
    }
    if (drag.button != PointerButton::Left) {
        return false;
    }
    drag_->total += Point{drag.dx, drag.dy};
    if (drag.node < firstAreaNode()) {
        ScaleSpec& s = scales_[drag.node - firstScaleNode()];
        const Point next = drag_->point + drag_->total;
        if (next == s.offset) {
            return false;
        }
        s.offset = next;
        return true;
    }
    const std::size_t h = drag.node - firstAreaNode();
    if (h >= handles_.size() || handles_[h] == FrameHandle::Strip) {
        return false;
    }
    const Rect next = dragFrameHandle(drag_->area, handles_[h], drag_->total, areaLimits_);
    if (next == area_) {
        return false;
    }
    area_ = next;
    return true;
}

Rect PlotComposite::bounds() const {
    std::vector<Rect> parts{area_};
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        parts.push_back(scaleRect(i));
    }
    for (std::size_t i = 0; i < comments_.size(); ++i) {
        const auto corners = commentCorners(i);
        parts.push_back(boundsOf(corners));
    }
    return boundsUnion(parts);
}

namespace {

LayoutRecord commentRecord(std::size_t index, const PlotComment& c) {
    return detail::pointRecord("c" + std::to_string(index), "comment", c.anchor, c.angle.radians);
}

void restoreComment(const LayoutRecord& rec, PlotComment& c) {
    c.anchor = {rec.x, rec.y};
    c.angle = {rec.angle};
}

} // namespace

LayoutRecord PlotComposite::saveRecord() const {
    LayoutRecord rec = detail::rectRecord(kind(), area_);
    for (std::size_t s = 0; s < scales_.size(); ++s) {
        LayoutRecord scale = detail::pointRecord("s" + std::to_string(s), "scale", scales_[s].offset);
        scale.w = scales_[s].thickness;
        for (std::size_t c = 0; c < comments_.size(); ++c) {
            if (comments_[c].owner == static_cast<int>(s)) {
                scale.children.push_back(commentRecord(c, comments_[c]));
            }
        }
        rec.children.push_back(std::move(scale));
    }
    for (std::size_t c = 0; c < comments_.size(); ++c) {
        if (comments_[c].owner < 0) {
            rec.children.push_back(commentRecord(c, comments_[c]));
        }
    }
    return rec;
}

void PlotComposite::restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) {
    const Size clamped = areaLimits_.clamp({record.w, record.h});
    if (clamped != Size{record.w, record.h}) {
        warnings.push_back("'" + record.tag + "': area size clamped to its limits");
    }
    area_ = {record.x, record.y, clamped.w, clamped.h};
    for (std::size_t s = 0; s < scales_.size(); ++s) {
        if (const LayoutRecord* scale = record.child("s" + std::to_string(s))) {
            scales_[s].offset = {scale->x, scale->y};
        }
    }
    for (std::size_t c = 0; c < comments_.size(); ++c) {
        const std::string tag = "c" + std::to_string(c);
        const int owner = comments_[c].owner;
        const LayoutRecord* parent = owner < 0 ? &record : record.child("s" + std::to_string(owner));
        if (parent == nullptr) {
            continue;
        }
        if (const LayoutRecord* rec = parent->child(tag)) {
            restoreComment(*rec, comments_[c]);
        }
    }
}

void PlotComposite::render(RenderModel& model) const {
    model.rect(area_, "plot-area");
    if (!title_.empty()) {
        model.text(title_, {area_.center().x, area_.y + 10}, {}, "title");
    }
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        model.rect(scaleRect(i), "scale");
    }
    for (std::size_t i = 0; i < comments_.size(); ++i) {
        model.text(comments_[i].text, commentCenter(i), comments_[i].angle, "comment");
    }
}

void PlotComposite::checkInvariants(std::vector<std::string>& violations) const {
    if (!areaLimits_.admits(area_.size())) {
        violations.push_back("plot '" + title_ + "': area outside its limits");
    }
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        const Rect r = scaleRect(i);
        const bool horizontal = scales_[i].side == Side::Top || scales_[i].side == Side::Bottom;
        if ((horizontal ? r.w : r.h) != (horizontal ? area_.w : area_.h)) {
            violations.push_back("plot '" + title_ + "': scale length differs from its side");
        }
    }
}

} // namespace movekit
