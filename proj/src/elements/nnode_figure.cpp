#include "movekit/elements/nnode_figure.hpp"

#include <algorithm>
#include <limits>

#include "record_util.hpp"

namespace movekit {

NNodeFigure::NNodeFigure(Point center, std::vector<double> radii, int count, double nodeRadius)
    : center_(center), radii_(std::move(radii)), count_(count), nodeRadius_(nodeRadius) {
    makeNNodeBorderCover(center_, radii_, nodeRadius_, count_); // validates
    if (radii_.front() < kMinRadius || (isRing() && radii_[1] - radii_[0] < kMinRingWidth)) {
        throw std::invalid_argument("NNodeFigure: radius below the minimum size");
    }
}

Cover NNodeFigure::defineCover() const { return makeNNodeBorderCover(center_, radii_, nodeRadius_, count_); }

Rect NNodeFigure::bounds() const {
    const double r = radii_.back();
    return {center_.x - r, center_.y - r, 2 * r, 2 * r};
}

double NNodeFigure::clampRadius(std::size_t index, double r) const {
    double lo = kMinRadius;
    double hi = std::numeric_limits<double>::max();
    if (isRing()) {
        if (index == 0) {
            hi = radii_[1] - kMinRingWidth;
        } else {
            lo = radii_[0] + kMinRingWidth;
        }
    }
    r = std::clamp(r, lo, hi);
    // r1 - r0 is rounded, so the bound itself may still fall short by an ulp.
    if (isRing()) {
        while (index == 0 && radii_[1] - r < kMinRingWidth) {
            r = std::nextafter(r, 0.0);
        }
        while (index == 1 && r - radii_[0] < kMinRingWidth) {
            r = std::nextafter(r, std::numeric_limits<double>::max());
        }
    }
    return r;
}

void NNodeFigure::onCatch(std::size_t node, PointerButton /*button*/) {
    const std::size_t border = node / static_cast<std::size_t>(count_);
    drag_ = Drag{node, border < radii_.size() ? radii_[border] : 0.0, {}};
}

bool NNodeFigure::moveNode(const NodeDrag& drag) {
    const std::size_t border = drag.node / static_cast<std::size_t>(count_);
    if (drag.button != PointerButton::Left || border >= radii_.size()) {
        return false;
    }
    if (!drag_ || drag_->node != drag.node) {
        onCatch(drag.node, drag.button);
    }
    // The radius follows the change of the pointer's distance from the center since the catch.
    drag_->total += Point{drag.dx, drag.dy};
    const Point grab = drag.pointer - drag_->total;
    const double next = clampRadius(border, drag_->radius + distance(drag.pointer, center_) - distance(grab, center_));
    if (next == radii_[border]) {
        return false;
    }
    radii_[border] = next;
    return true;
}

LayoutRecord NNodeFigure::saveRecord() const {
    LayoutRecord rec;
    rec.kind = std::string(kind());
    rec.x = center_.x;
    rec.y = center_.y;
    rec.w = 2 * radii_.back();
    rec.h = 2 * radii_.front();
    return rec;
}

void NNodeFigure::restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) {
    center_ = {record.x, record.y};
    bool clamped = false;
    auto atLeast = [&clamped](double wanted, double lo) {
        clamped = clamped || wanted < lo;
        return std::max(wanted, lo);
    };
    if (isRing()) {
        radii_[0] = atLeast(record.h / 2, kMinRadius);
        radii_[1] = atLeast(record.w / 2, radii_[0] + kMinRingWidth);
        while (radii_[1] - radii_[0] < kMinRingWidth) {
            radii_[1] = std::nextafter(radii_[1], std::numeric_limits<double>::max());
        }
    } else {
        radii_[0] = atLeast(record.w / 2, kMinRadius);
    }
    if (clamped) {
        warnings.push_back("'" + record.tag + "': radius clamped to the figure's minimums");
    }
}

void NNodeFigure::render(RenderModel& model) const {
    for (double r : radii_) {
        model.circle(center_, r, isRing() ? "ring" : "disc");
    }
}

void NNodeFigure::checkInvariants(std::vector<std::string>& violations) const {
    if (radii_.front() < kMinRadius) {
        violations.push_back("n-node figure: radius below minimum");
    }
    if (isRing() && radii_[1] - radii_[0] < kMinRingWidth) {
        violations.push_back("n-node figure: ring narrower than minimum");
    }
    if (!center_.isFinite()) {
        violations.push_back("n-node figure: non-finite center");
    }
}

} // namespace movekit
