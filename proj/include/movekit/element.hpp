#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "movekit/cover.hpp"
#include "movekit/geometry.hpp"
#include "movekit/record.hpp"
#include "movekit/render.hpp"

namespace movekit {

/// Left starts forward movement and resizing; Right starts rotation.
enum class PointerButton { Left, Right };

/// One individual-node movement delivered by the Mover.
struct NodeDrag {
    std::size_t node = 0;
    /// Pointer displacement since the previous event, already restricted by the node's freedom.
    double dx = 0.0;
    double dy = 0.0;
    /// Current pointer location.
    Point pointer;
    PointerButton button = PointerButton::Left;
    /// Rotation only: the pivot fixed at catch time and the turn since the previous event.
    Point pivot;
    Angle turn;
};

/// Anything the Mover can catch. Implementations keep defineCover() in step with
/// their geometry after every move() and moveNode().
class Element {
public:
    virtual ~Element() = default;

    /// Class tag written to layout files.
    virtual std::string_view kind() const = 0;

    virtual Cover defineCover() const = 0;

    /// Forward movement of the whole element.
    virtual void move(double dx, double dy) = 0;

    /// Individual movement of node `drag.node`. Returns true iff geometry changed.
    virtual bool moveNode(const NodeDrag& drag) = 0;

    virtual Rect bounds() const = 0;

    /// Whether a right-button catch on this node starts a rotation.
    virtual bool canRotate(std::size_t /*node*/) const { return false; }
    virtual Point rotationPivot(std::size_t /*node*/) const { return bounds().center(); }

    /// False for nodes that only shield an area (control interiors inside a group):
    /// a press there reaches the element but catches nothing.
    virtual bool acceptsCatch(std::size_t /*node*/) const { return true; }

    virtual void onCatch(std::size_t /*node*/, PointerButton /*button*/) {}
    virtual void onRelease() {}

    /// Used when the Mover frames an element automatically. Throws std::logic_error
    /// for elements that cannot be resized that way.
    virtual void resizeTo(const Rect& rect);

    /// Geometry for persistence; the tag is filled by the owning scene.
    virtual LayoutRecord saveRecord() const = 0;
    /// Applies a saved record. Values that would break invariants are clamped and reported.
    virtual void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) = 0;

    virtual void render(RenderModel& model) const = 0;

    /// Appends a message for every broken invariant.
    virtual void checkInvariants(std::vector<std::string>& /*violations*/) const {}
};

} // namespace movekit
