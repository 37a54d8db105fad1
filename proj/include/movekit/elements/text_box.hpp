#pragma once

#include <array>
#include <string_view>

#include "movekit/geometry.hpp"

namespace movekit {

/// Painted text uses fixed metrics: 7 px per character and a 14 px line.
inline Size textBoxSize(std::string_view content) {
    const double chars = content.empty() ? 1.0 : static_cast<double>(content.size());
    return {7.0 * chars, 14.0};
}

/// Corners of the text box centered at `center` and turned by `angle`, clockwise on screen.
inline std::array<Point, 4> textBoxCorners(std::string_view content, Point center, Angle angle) {
    const Size s = textBoxSize(content);
    const double hw = s.w / 2;
    const double hh = s.h / 2;
    return {rotatePoint({center.x - hw, center.y - hh}, center, angle),
            rotatePoint({center.x + hw, center.y - hh}, center, angle),
            rotatePoint({center.x + hw, center.y + hh}, center, angle),
            rotatePoint({center.x - hw, center.y + hh}, center, angle)};
}

} // namespace movekit
