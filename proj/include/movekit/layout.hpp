#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "movekit/record.hpp"

namespace movekit {

class Scene;

/// Parsed `.mrl` layout file.
///
/// Text format, one record per line:
///
///     MRL1 <sceneId>
///     <tag> <kind> <x> <y> <w> <h> <angle>
///       <childTag> <kind> <x> <y> <w> <h> <angle>
///
/// Records appear in z-order (bottom first). Child records are indented two spaces
/// per level. Reals are written with 17 significant digits.
struct LayoutDocument {
    std::string sceneId;
    std::vector<LayoutRecord> records;

    bool operator==(const LayoutDocument&) const = default;
};

inline constexpr std::string_view kLayoutMagic = "MRL1";

/// Malformed layout text. `line()` is 1-based; 0 when the error is not tied to a line.
class LayoutError : public std::runtime_error {
public:
    LayoutError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

std::string formatLayout(const LayoutDocument& doc);
/// Throws LayoutError for a bad header, unsupported version, or malformed line.
LayoutDocument parseLayout(std::string_view text);

LayoutDocument captureLayout(const Scene& scene);
std::string saveLayout(const Scene& scene);

/// Applies geometry and z-order from `doc`. Unknown tags and clamped values produce
/// warnings; elements absent from the document keep their state and z-slot.
/// Throws LayoutError when the scene id does not match. Releases any caught element first.
std::vector<std::string> applyLayout(Scene& scene, const LayoutDocument& doc);
std::vector<std::string> restoreLayout(Scene& scene, std::string_view text);

/// Formats a real the way layout files do (17 significant digits).
std::string formatReal(double value);

} // namespace movekit
