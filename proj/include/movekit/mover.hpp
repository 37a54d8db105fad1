#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "movekit/cover.hpp"
#include "movekit/element.hpp"

namespace movekit {

/// Opaque identifier assigned at registration; never reused by the same Mover.
struct ElementId {
    std::uint64_t value = 0;
    constexpr bool operator==(const ElementId&) const = default;
};

enum class DragMode { Forward, Rotate };

struct Idle {};

struct Caught {
    ElementId element;
    std::size_t node = 0;
    Freedom freedom = Freedom::None;
    Point lastPoint;
    PointerButton button = PointerButton::Left;
    DragMode mode = DragMode::Forward;
    Point pivot;      // Rotate only
    Angle grabAngle;  // Rotate only
    Angle applied;    // rotation delivered so far in this drag
};

using MoverState = std::variant<Idle, Caught>;

struct CaughtNode {
    ElementId element;
    std::size_t node = 0;
    constexpr bool operator==(const CaughtNode&) const = default;
};

/// The single supervisor of all moving, resizing and rotation. Feed it the three
/// pointer events; it hit-tests registered elements from the top of the z-order down.
///
/// Not thread-safe: callers serialize events.
class Mover {
public:
    Mover() = default;
    Mover(const Mover&) = delete;
    Mover& operator=(const Mover&) = delete;
    Mover(Mover&&) = default;
    Mover& operator=(Mover&&) = default;

    /// Registers `element` on top of the z-order. With `autoFrame`, the Mover supplies
    /// a rectangular frame cover around element.bounds() whose resize nodes follow the
    /// limits; the element must then support resizeTo(). Throws std::invalid_argument
    /// when the element is already registered.
    ElementId add(Element& element, std::optional<SizeLimits> autoFrame = std::nullopt);

    /// Throws std::out_of_range for an unknown id. Removing the caught element releases it first.
    void remove(ElementId id);
    void bringToFront(ElementId id);

    /// Press. A catch while something is caught releases it first.
    bool catchAt(Point p, PointerButton button);
    /// Pointer motion. Returns true iff some geometry changed.
    bool move(Point p);
    /// Button release. Returns what was caught.
    std::optional<CaughtNode> release();

    Cursor cursor(Point p) const;

    const MoverState& state() const { return state_; }
    bool isCaught() const { return std::holds_alternative<Caught>(state_); }

    /// Bottom to top.
    std::vector<ElementId> zOrder() const;
    /// Reorders registered elements; `order` must be a permutation of zOrder().
    void setZOrder(const std::vector<ElementId>& order);

    bool contains(ElementId id) const;
    std::size_t size() const { return entries_.size(); }

    /// The element as registered (not the automatic frame wrapper).
    Element& element(ElementId id) const;
    /// The cover the Mover hit-tests for this element.
    Cover cover(ElementId id) const;
    std::optional<ResizePolicy> autoFramePolicy(ElementId id) const;

    /// Frame band width for automatic frames.
    double frameWidth() const { return frameWidth_; }
    void setFrameWidth(double width);

private:
    struct Entry {
        ElementId id;
        Element* element = nullptr;
        std::unique_ptr<Element> frame; // present for automatically framed elements
        std::optional<ResizePolicy> policy;

        Element& target() const { return frame ? *frame : *element; }
    };

    std::vector<Entry>::iterator find(ElementId id);
    std::vector<Entry>::const_iterator find(ElementId id) const;
    const Entry* topmostHit(Point p, std::size_t& node) const;

    std::vector<Entry> entries_; // bottom to top
    std::uint64_t nextId_ = 1;
    double frameWidth_ = kDefaultFrameWidth;
    MoverState state_ = Idle{};
};

} // namespace movekit
