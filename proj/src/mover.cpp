#include "movekit/mover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace movekit {

void Element::resizeTo(const Rect& /*rect*/) {
    throw std::logic_error(std::string("element of kind '") + std::string(kind()) + "' cannot be resized to a rect");
}

namespace {

/// Wraps an element that has no cover of its own in the standard control frame.
class AutoFrame final : public Element {
public:
    AutoFrame(Element& target, SizeLimits limits, double frameWidth)
        : target_(target), limits_(limits), policy_(policyFromLimits(limits)),
          handles_(rectFrameHandles(policy_)), frameWidth_(frameWidth) {}

    ResizePolicy policy() const { return policy_; }
    void setFrameWidth(double w) { frameWidth_ = w; }

    std::string_view kind() const override { return target_.kind(); }
    Cover defineCover() const override { return makeRectFrameCover(target_.bounds(), frameWidth_, policy_); }
    void move(double dx, double dy) override { target_.move(dx, dy); }

    bool moveNode(const NodeDrag& drag) override {
        if (drag.button != PointerButton::Left || drag.node >= handles_.size()) {
            return false;
        }
        if (!dragging_) {
            onCatch(drag.node, drag.button);
        }
        total_ += Point{drag.dx, drag.dy};
        const Rect next = dragFrameHandle(start_, handles_[drag.node], total_, limits_);
        if (next == target_.bounds()) {
            return false;
        }
        target_.resizeTo(next);
        return true;
    }

    Rect bounds() const override { return target_.bounds(); }
    void onCatch(std::size_t node, PointerButton button) override {
        dragging_ = true;
        start_ = target_.bounds();
        total_ = {};
        target_.onCatch(node, button);
    }
    void onRelease() override {
        dragging_ = false;
        target_.onRelease();
    }
    void resizeTo(const Rect& rect) override { target_.resizeTo(rect); }
    LayoutRecord saveRecord() const override { return target_.saveRecord(); }
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override {
        target_.restoreRecord(record, warnings);
    }
    void render(RenderModel& model) const override { target_.render(model); }
    void checkInvariants(std::vector<std::string>& violations) const override {
        target_.checkInvariants(violations);
        if (!limits_.admits(target_.bounds().size())) {
            violations.push_back("auto-framed element outside its size limits");
        }
    }

private:
    Element& target_;
    SizeLimits limits_;
    ResizePolicy policy_;
    std::vector<FrameHandle> handles_;
    double frameWidth_;
    bool dragging_ = false;
    Rect start_;
    Point total_;
};

} // namespace

ElementId Mover::add(Element& element, std::optional<SizeLimits> autoFrame) {
    for (const Entry& e : entries_) {
        if (e.element == &element) {
            throw std::invalid_argument("Mover::add: element already registered");
        }
    }
    Entry entry;
    entry.id = ElementId{nextId_++};
    entry.element = &element;
    if (autoFrame) {
        auto frame = std::make_unique<AutoFrame>(element, *autoFrame, frameWidth_);
        entry.policy = frame->policy();
        entry.frame = std::move(frame);
    }
    entries_.push_back(std::move(entry));
    return entries_.back().id;
}

std::vector<Mover::Entry>::iterator Mover::find(ElementId id) {
    return std::find_if(entries_.begin(), entries_.end(), [id](const Entry& e) { return e.id == id; });
}

std::vector<Mover::Entry>::const_iterator Mover::find(ElementId id) const {
    return std::find_if(entries_.begin(), entries_.end(), [id](const Entry& e) { return e.id == id; });
}

bool Mover::contains(ElementId id) const { return find(id) != entries_.end(); }

void Mover::remove(ElementId id) {
    auto it = find(id);
    if (it == entries_.end()) {
        throw std::out_of_range("Mover::remove: unknown element id " + std::to_string(id.value));
    }
    if (const auto* caught = std::get_if<Caught>(&state_); caught && caught->element == id) {
        release();
        it = find(id);
    }
    entries_.erase(it);
}

void Mover::bringToFront(ElementId id) {
    auto it = find(id);
    if (it == entries_.end()) {
        throw std::out_of_range("Mover::bringToFront: unknown element id " + std::to_string(id.value));
    }
    std::rotate(it, it + 1, entries_.end());
}

std::vector<ElementId> Mover::zOrder() const {
    std::vector<ElementId> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) {
        out.push_back(e.id);
    }
    return out;
}

void Mover::setZOrder(const std::vector<ElementId>& order) {
    if (order.size() != entries_.size()) {
        throw std::invalid_argument("Mover::setZOrder: not a permutation of the registered elements");
    }
    std::vector<Entry> reordered;
    reordered.reserve(entries_.size());
    for (ElementId id : order) {
        auto it = find(id);
        if (it == entries_.end() || it->element == nullptr) {
            throw std::invalid_argument("Mover::setZOrder: not a permutation of the registered elements");
        }
        reordered.push_back(std::move(*it));
        it->element = nullptr; // marks the moved-from slot as used
    }
    entries_ = std::move(reordered);
}

Element& Mover::element(ElementId id) const {
    auto it = find(id);
    if (it == entries_.end()) {
        throw std::out_of_range("Mover::element: unknown element id " + std::to_string(id.value));
    }
    return *it->element;
}

Cover Mover::cover(ElementId id) const {
    auto it = find(id);
    if (it == entries_.end()) {
        throw std::out_of_range("Mover::cover: unknown element id " + std::to_string(id.value));
    }
    return it->target().defineCover();
}

std::optional<ResizePolicy> Mover::autoFramePolicy(ElementId id) const {
    auto it = find(id);
    if (it == entries_.end()) {
        throw std::out_of_range("Mover::autoFramePolicy: unknown element id " + std::to_string(id.value));
    }
    return it->policy;
}

void Mover::setFrameWidth(double width) {
    if (!(width > 0) || !std::isfinite(width)) {
        throw std::invalid_argument("Mover::setFrameWidth: width must be positive");
    }
    frameWidth_ = width;
    for (Entry& e : entries_) {
        if (e.frame) {
            static_cast<AutoFrame&>(*e.frame).setFrameWidth(width);
        }
    }
}

const Mover::Entry* Mover::topmostHit(Point p, std::size_t& node) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (auto hit = it->target().defineCover().hit(p)) {
            node = *hit;
            return &*it;
        }
    }
    return nullptr;
}

bool Mover::catchAt(Point p, PointerButton button) {
    requireFinite(p, "Mover::catchAt");
    release();

    std::size_t node = 0;
    const Entry* entry = topmostHit(p, node);
    if (entry == nullptr) {
        return false;
    }
    Element& target = entry->target();
    if (!target.acceptsCatch(node)) {
        return false;
    }

    Caught caught;
    caught.element = entry->id;
    caught.node = node;
    caught.freedom = target.defineCover().node(node).freedom();
    caught.lastPoint = p;
    caught.button = button;
    if (button == PointerButton::Right) {
        if (!target.canRotate(node)) {
            return false;
        }
        caught.mode = DragMode::Rotate;
        caught.pivot = target.rotationPivot(node);
        caught.grabAngle = direction(caught.pivot, p);
    }
    target.onCatch(node, button);
    state_ = caught;
    return true;
}

bool Mover::move(Point p) {
    requireFinite(p, "Mover::move");
    auto* caught = std::get_if<Caught>(&state_);
    if (caught == nullptr) {
        return false;
    }
    Element& target = find(caught->element)->target();
    const Point d = p - caught->lastPoint;
    caught->lastPoint = p;

    NodeDrag drag;
    drag.node = caught->node;
    drag.pointer = p;
    drag.button = caught->button;

    if (caught->mode == DragMode::Rotate) {
        // The direction from the pivot is undefined at the pivot itself.
        if (distance(p, caught->pivot) < 1e-9) {
            return false;
        }
        const Angle sinceGrab = direction(caught->pivot, p) - caught->grabAngle;
        const Angle turn = (sinceGrab - caught->applied).normalized();
        if (turn.radians == 0.0) {
            return false;
        }
        caught->applied = caught->applied + turn;
        drag.dx = d.x;
        drag.dy = d.y;
        drag.pivot = caught->pivot;
        drag.turn = turn;
        return target.moveNode(drag);
    }

    switch (caught->freedom) {
    case Freedom::None:
        if (d.x == 0.0 && d.y == 0.0) {
            return false;
        }
        target.move(d.x, d.y);
        return true;
    case Freedom::NS: drag.dy = d.y; break;
    case Freedom::WE: drag.dx = d.x; break;
    case Freedom::Any:
        drag.dx = d.x;
        drag.dy = d.y;
        break;
    }
    if (drag.dx == 0.0 && drag.dy == 0.0) {
        return false;
    }
    return target.moveNode(drag);
}

std::optional<CaughtNode> Mover::release() {
    const auto* caught = std::get_if<Caught>(&state_);
    if (caught == nullptr) {
        return std::nullopt;
    }
    const CaughtNode out{caught->element, caught->node};
    state_ = Idle{};
    if (auto it = find(out.element); it != entries_.end()) {
        it->target().onRelease();
    }
    return out;
}

Cursor Mover::cursor(Point p) const {
    requireFinite(p, "Mover::cursor");
    if (const auto* caught = std::get_if<Caught>(&state_)) {
        return find(caught->element)->target().defineCover().node(caught->node).cursor();
    }
    std::size_t node = 0;
    if (const Entry* entry = topmostHit(p, node)) {
        return entry->target().defineCover().node(node).cursor();
    }
    return Cursor::Default;
}

} // namespace movekit
