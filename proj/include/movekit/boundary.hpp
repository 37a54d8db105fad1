#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "movekit/render.hpp"
#include "movekit/scene.hpp"

namespace movekit {

/// Request/response endpoint for a host UI. Every request is a JSON object with a
/// `type` and gets exactly one response object with `ok` (and `error` when false).
/// An `id` member, when present, is echoed back.
///
///     listScenes                      -> scenes
///     init {scene}                    -> scene, extent, tags
///     pointerDown {x, y, button}      -> caught, cursor        (button "left" | "right")
///     pointerMove {x, y}              -> changed
///     pointerUp                       -> released {tag, node} | null
///     getCursor {x, y}                -> cursor
///     getRenderModel {overlay?}       -> commands
///     saveLayout                      -> document
///     restoreLayout {document}        -> warnings
class BoundarySession {
public:
    nlohmann::json handle(const nlohmann::json& request);
    /// One request line in, one response line out. Malformed JSON yields an error response.
    std::string handleLine(std::string_view line);

    bool hasScene() const { return scene_ != nullptr; }
    const Scene& scene() const;

private:
    nlohmann::json dispatch(const std::string& type, const nlohmann::json& request);
    Scene& requireScene();

    std::unique_ptr<Scene> scene_;
};

nlohmann::json toJson(const RenderModel& model);

} // namespace movekit
