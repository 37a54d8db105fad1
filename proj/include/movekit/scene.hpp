#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "movekit/element.hpp"
#include "movekit/mover.hpp"
#include "movekit/render.hpp"

namespace movekit {

/// Owns a set of elements, registers them with one Mover, and names each with a
/// stable tag used by layout files and trace assertions.
class Scene {
public:
    explicit Scene(std::string id, Size extent = {640, 480});

    Scene(const Scene&) = delete;
    Scene& operator=(const Scene&) = delete;

    const std::string& id() const { return id_; }
    /// Nominal canvas size.
    Size extent() const { return extent_; }

    /// Takes ownership and registers on top of the z-order. Tags are unique, non-empty
    /// and contain neither whitespace nor '/'; violations throw std::invalid_argument.
    ElementId add(std::string tag, std::unique_ptr<Element> element, std::optional<SizeLimits> autoFrame = {});

    template <class E, class... Args>
    E& emplace(std::string tag, Args&&... args) {
        auto owned = std::make_unique<E>(std::forward<Args>(args)...);
        E& ref = *owned;
        add(std::move(tag), std::move(owned));
        return ref;
    }

    Mover& mover() { return mover_; }
    const Mover& mover() const { return mover_; }

    /// Throws std::out_of_range for an unknown tag.
    Element& element(const std::string& tag) const;
    ElementId idOf(const std::string& tag) const;
    std::optional<ElementId> findId(const std::string& tag) const;
    const std::string& tagOf(ElementId id) const;

    /// Tags bottom to top.
    std::vector<std::string> tags() const;
    /// Every element bottom to top.
    std::vector<Element*> elements() const;

    /// Back to front; with `overlay`, every element's cover follows its own commands.
    RenderModel render(bool overlay = false) const;

    /// Invariant violations across all elements, prefixed with the element tag.
    std::vector<std::string> checkInvariants() const;

private:
    struct Owned {
        std::string tag;
        ElementId id;
        std::unique_ptr<Element> element;
    };

    const Owned& owned(ElementId id) const;

    std::string id_;
    Size extent_;
    std::vector<Owned> owned_;
    Mover mover_;
};

} // namespace movekit
