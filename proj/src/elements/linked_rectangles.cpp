#include "movekit/elements/linked_rectangles.hpp"

#include "record_util.hpp"

namespace movekit {

LinkedRectangles::LinkedRectangles(std::vector<Rect> rects, std::vector<std::string> labels)
    : rects_(std::move(rects)), labels_(std::move(labels)) {
    if (rects_.empty()) {
        throw std::invalid_argument("LinkedRectangles: needs at least one rect");
    }
    for (const Rect& r : rects_) {
        if (!r.isFinite() || !(r.w > 0) || !(r.h > 0)) {
            throw std::invalid_argument("LinkedRectangles: rects need positive width and height");
        }
        offsets_.push_back(r.topLeft() - rects_.front().topLeft());
    }
    labels_.resize(rects_.size());
}

Cover LinkedRectangles::defineCover() const {
    Cover cover;
    for (const Rect& r : rects_) {
        cover.add(CoverNode::rect(r, Freedom::None, Cursor::MoveAll));
    }
    return cover;
}

void LinkedRectangles::move(double dx, double dy) {
    // Every rect is re-derived from the first so the offsets stay bit-exact.
    rects_.front() = rects_.front().translated(dx, dy);
    const Point origin = rects_.front().topLeft();
    for (std::size_t i = 1; i < rects_.size(); ++i) {
        rects_[i].x = origin.x + offsets_[i].x;
        rects_[i].y = origin.y + offsets_[i].y;
    }
}

LayoutRecord LinkedRectangles::saveRecord() const {
    return detail::rectRecord(kind(), rects_.front());
}

void LinkedRectangles::restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) {
    const Rect& first = rects_.front();
    if (record.w != first.w || record.h != first.h) {
        warnings.push_back("'" + record.tag + "': linked rectangles are not resizable; size ignored");
    }
    rects_.front().x = record.x;
    rects_.front().y = record.y;
    move(0, 0);
}

void LinkedRectangles::render(RenderModel& model) const {
    for (std::size_t i = 0; i < rects_.size(); ++i) {
        model.rect(rects_[i], "linked");
        if (!labels_[i].empty()) {
            model.text(labels_[i], rects_[i].center(), {}, "label");
        }
    }
}

void LinkedRectangles::checkInvariants(std::vector<std::string>& violations) const {
    const Point origin = rects_.front().topLeft();
    for (std::size_t i = 0; i < rects_.size(); ++i) {
        if (rects_[i].topLeft() != origin + offsets_[i]) {
            violations.push_back("linked rectangles: offset of rect " + std::to_string(i) + " changed");
        }
    }
}

} // namespace movekit
