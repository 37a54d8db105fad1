#include "movekit/scene.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace movekit {

namespace {

bool validTag(const std::string& tag) {
    return !tag.empty() && std::none_of(tag.begin(), tag.end(), [](unsigned char c) {
        return std::isspace(c) != 0 || c == '/' || std::iscntrl(c) != 0;
    });
}

} // namespace

Scene::Scene(std::string id, Size extent) : id_(std::move(id)), extent_(extent) {
    if (!validTag(id_)) {
        throw std::invalid_argument("Scene: id must be a non-empty token without whitespace");
    }
}

ElementId Scene::add(std::string tag, std::unique_ptr<Element> element, std::optional<SizeLimits> autoFrame) {
    if (!validTag(tag)) {
        throw std::invalid_argument("Scene::add: invalid tag '" + tag + "'");
    }
    if (findId(tag)) {
        throw std::invalid_argument("Scene::add: duplicate tag '" + tag + "'");
    }
    if (!element) {
        throw std::invalid_argument("Scene::add: null element");
    }
    const ElementId id = mover_.add(*element, autoFrame);
    owned_.push_back({std::move(tag), id, std::move(element)});
    return id;
}

const Scene::Owned& Scene::owned(ElementId id) const {
    for (const Owned& o : owned_) {
        if (o.id == id) {
            return o;
        }
    }
    throw std::out_of_range("Scene: unknown element id " + std::to_string(id.value));
}

std::optional<ElementId> Scene::findId(const std::string& tag) const {
    for (const Owned& o : owned_) {
        if (o.tag == tag) {
            return o.id;
        }
    }
    return std::nullopt;
}

ElementId Scene::idOf(const std::string& tag) const {
    if (auto id = findId(tag)) {
        return *id;
    }
    throw std::out_of_range("Scene: unknown element tag '" + tag + "'");
}

Element& Scene::element(const std::string& tag) const { return *owned(idOf(tag)).element; }

const std::string& Scene::tagOf(ElementId id) const { return owned(id).tag; }

std::vector<std::string> Scene::tags() const {
    std::vector<std::string> out;
    for (ElementId id : mover_.zOrder()) {
        out.push_back(tagOf(id));
    }
    return out;
}

std::vector<Element*> Scene::elements() const {
    std::vector<Element*> out;
    for (ElementId id : mover_.zOrder()) {
        out.push_back(owned(id).element.get());
    }
    return out;
}

RenderModel Scene::render(bool overlay) const {
    RenderModel model;
    for (ElementId id : mover_.zOrder()) {
        owned(id).element->render(model);
        if (overlay) {
            model.overlay(mover_.cover(id));
        }
    }
    return model;
}

std::vector<std::string> Scene::checkInvariants() const {
    std::vector<std::string> out;
    for (ElementId id : mover_.zOrder()) {
        std::vector<std::string> local;
        owned(id).element->checkInvariants(local);
        for (std::string& v : local) {
            out.push_back(tagOf(id) + ": " + v);
        }
    }
    return out;
}

} // namespace movekit
