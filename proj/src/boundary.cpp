#include "movekit/boundary.hpp"

#include <stdexcept>

#include "movekit/catalog.hpp"
#include "movekit/layout.hpp"

namespace movekit {

using nlohmann::json;

namespace {

/// A request that cannot be served; reported as an error response.
class RequestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json point(Point p) { return json::array({p.x, p.y}); }

json rect(const Rect& r) { return {{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}}; }

json shape(const NodeShape& s) {
    return std::visit(
        [](const auto& v) -> json {
            using S = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<S, Circle>) {
                return {{"type", "circle"}, {"center", point(v.center)}, {"radius", v.radius}};
            } else if constexpr (std::is_same_v<S, Capsule>) {
                return {{"type", "capsule"}, {"p1", point(v.p1)}, {"p2", point(v.p2)}, {"halfWidth", v.halfWidth}};
            } else {
                json vertices = json::array();
                for (const Point& p : v.vertices) {
                    vertices.push_back(point(p));
                }
                return {{"type", "polygon"}, {"vertices", vertices}};
            }
        },
        s);
}

double number(const json& request, const char* key) {
    const auto it = request.find(key);
    if (it == request.end() || !it->is_number()) {
        throw RequestError(std::string("missing numeric field '") + key + "'");
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
        throw RequestError(std::string("field '") + key + "' must be finite");
    }
    return v;
}

std::string text(const json& request, const char* key) {
    const auto it = request.find(key);
    if (it == request.end() || !it->is_string()) {
        throw RequestError(std::string("missing string field '") + key + "'");
    }
    return it->get<std::string>();
}

PointerButton button(const json& request) {
    const auto it = request.find("button");
    if (it == request.end()) {
        return PointerButton::Left;
    }
    if (*it == "left") {
        return PointerButton::Left;
    }
    if (*it == "right") {
        return PointerButton::Right;
    }
    throw RequestError("button must be \"left\" or \"right\"");
}

} // namespace

json toJson(const RenderModel& model) {
    json out = json::array();
    for (const DrawCommand& cmd : model.commands) {
        out.push_back(std::visit(
            [](const auto& c) -> json {
                using C = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<C, FilledRect>) {
                    return {{"kind", "rect"}, {"rect", rect(c.rect)}, {"style", c.style}};
                } else if constexpr (std::is_same_v<C, PolygonOutline>) {
                    json vertices = json::array();
                    for (const Point& p : c.vertices) {
                        vertices.push_back(point(p));
                    }
                    return {{"kind", "polygon"}, {"vertices", vertices}, {"style", c.style}};
                } else if constexpr (std::is_same_v<C, CircleOutline>) {
                    return {{"kind", "circle"}, {"center", point(c.center)}, {"radius", c.radius}, {"style", c.style}};
                } else if constexpr (std::is_same_v<C, TextCommand>) {
                    return {{"kind", "text"},
                            {"content", c.content},
                            {"position", point(c.position)},
                            {"angle", c.angle.radians},
                            {"style", c.style}};
                } else {
                    return {{"kind", "debugNode"}, {"shape", shape(c.shape)}, {"freedom", toString(c.freedom)}};
                }
            },
            cmd));
    }
    return out;
}

const Scene& BoundarySession::scene() const {
    if (!scene_) {
        throw std::logic_error("BoundarySession: no scene loaded");
    }
    return *scene_;
}

Scene& BoundarySession::requireScene() {
    if (!scene_) {
        throw RequestError("no scene loaded; send init first");
    }
    return *scene_;
}

json BoundarySession::handle(const json& request) {
    json response;
    try {
        if (!request.is_object()) {
            throw RequestError("request must be a JSON object");
        }
        response = dispatch(text(request, "type"), request);
        response["ok"] = true;
    } catch (const RequestError& e) {
        response = {{"ok", false}, {"error", e.what()}};
    } catch (const LayoutError& e) {
        response = {{"ok", false}, {"error", e.what()}};
    } catch (const std::out_of_range& e) {
        response = {{"ok", false}, {"error", e.what()}};
    } catch (const std::invalid_argument& e) {
        response = {{"ok", false}, {"error", e.what()}};
    }
    if (request.is_object()) {
        if (const auto id = request.find("id"); id != request.end()) {
            response["id"] = *id;
        }
    }
    return response;
}

std::string BoundarySession::handleLine(std::string_view line) {
    json request;
    try {
        request = json::parse(line);
    } catch (const json::parse_error& e) {
        return json{{"ok", false}, {"error", std::string("malformed request: ") + e.what()}}.dump();
    }
    return handle(request).dump();
}

json BoundarySession::dispatch(const std::string& type, const json& request) {
    if (type == "listScenes") {
        return {{"scenes", sceneNames()}};
    }
    if (type == "init") {
        scene_ = makeScene(text(request, "scene"));
        return {{"scene", scene_->id()},
                {"extent", {{"w", scene_->extent().w}, {"h", scene_->extent().h}}},
                {"tags", scene_->tags()}};
    }
    Scene& scene = requireScene();
    Mover& mover = scene.mover();
    if (type == "pointerDown") {
        const Point p{number(request, "x"), number(request, "y")};
        const bool caught = mover.catchAt(p, button(request));
        return {{"caught", caught}, {"cursor", toString(mover.cursor(p))}};
    }
    if (type == "pointerMove") {
        return {{"changed", mover.move({number(request, "x"), number(request, "y")})}};
    }
    if (type == "pointerUp") {
        const auto released = mover.release();
        if (!released) {
            return {{"released", nullptr}};
        }
        return {{"released", {{"tag", scene.tagOf(released->element)}, {"node", released->node}}}};
    }
    if (type == "getCursor") {
        return {{"cursor", toString(mover.cursor({number(request, "x"), number(request, "y")}))}};
    }
    if (type == "getRenderModel") {
        const auto overlay = request.find("overlay");
        if (overlay != request.end() && !overlay->is_boolean()) {
            throw RequestError("overlay must be a boolean");
        }
        return {{"commands", toJson(scene.render(overlay != request.end() && overlay->get<bool>()))}};
    }
    if (type == "saveLayout") {
        return {{"document", saveLayout(scene)}};
    }
    if (type == "restoreLayout") {
        return {{"warnings", restoreLayout(scene, text(request, "document"))}};
    }
    throw RequestError("unknown request type '" + type + "'");
}

} // namespace movekit
