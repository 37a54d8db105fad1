#include "movekit/elements/dependent_frame.hpp"

#include "movekit/elements/text_box.hpp"
#include "record_util.hpp"

namespace movekit {

DependentFrame::DependentFrame(std::vector<Element*> children, double margin, std::string title)
    : children_(std::move(children)), margin_(margin), title_(std::move(title)) {
    if (children_.empty()) {
        throw std::invalid_argument("DependentFrame: needs at least one child");
    }
    for (const Element* child : children_) {
        if (child == nullptr) {
            throw std::invalid_argument("DependentFrame: null child");
        }
    }
    if (!(margin > 0) || !std::isfinite(margin)) {
        throw std::invalid_argument("DependentFrame: margin must be positive");
    }
}

Rect DependentFrame::childUnion() const {
    std::vector<Rect> rects;
    rects.reserve(children_.size());
    for (const Element* child : children_) {
        rects.push_back(child->bounds());
    }
    return boundsUnion(rects);
}

Rect DependentFrame::frame() const { return childUnion().expanded(margin_); }

Cover DependentFrame::defineCover() const {
    const Rect in = childUnion();
    const Rect out = in.expanded(margin_);
    Cover cover;
    for (const Rect& strip : {Rect::fromEdges(out.left(), out.top(), out.right(), in.top()),
                              Rect::fromEdges(in.right(), in.top(), out.right(), in.bottom()),
                              Rect::fromEdges(out.left(), in.bottom(), out.right(), out.bottom()),
                              Rect::fromEdges(out.left(), in.top(), in.left(), in.bottom())}) {
        if (strip.w > 0 && strip.h > 0) {
            cover.add(CoverNode::rect(strip, Freedom::None, Cursor::MoveAll));
        }
    }
    return cover;
}

void DependentFrame::move(double dx, double dy) {
    for (Element* child : children_) {
        child->move(dx, dy);
    }
}

LayoutRecord DependentFrame::saveRecord() const { return detail::rectRecord(kind(), frame()); }

void DependentFrame::render(RenderModel& model) const {
    const Rect f = frame();
    model.polygon({f.topLeft(), {f.right(), f.top()}, {f.right(), f.bottom()}, {f.left(), f.bottom()}},
                  "dependent-frame");
    if (!title_.empty()) {
        model.text(title_, {f.x + 8 + textBoxSize(title_).w / 2, f.y}, {}, "title");
    }
}

void DependentFrame::checkInvariants(std::vector<std::string>& violations) const {
    if (!frame().isFinite()) {
        violations.push_back("dependent frame '" + title_ + "': non-finite frame");
    }
}

} // namespace movekit
