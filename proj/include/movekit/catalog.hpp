#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "movekit/scene.hpp"

namespace movekit {

/// Names of the built-in demo scenes, in menu order.
const std::vector<std::string>& sceneNames();

/// Builds a fresh copy of a named scene. Throws std::out_of_range for an unknown name.
std::unique_ptr<Scene> makeScene(std::string_view name);

} // namespace movekit
