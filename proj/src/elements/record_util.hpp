#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "movekit/record.hpp"
#include "movekit/geometry.hpp"

namespace movekit::detail {

inline LayoutRecord rectRecord(std::string_view kind, const Rect& r, double angle = 0.0) {
    LayoutRecord rec;
    rec.kind = std::string(kind);
    rec.x = r.x;
    rec.y = r.y;
    rec.w = r.w;
    rec.h = r.h;
    rec.angle = angle;
    return rec;
}

inline LayoutRecord pointRecord(std::string tag, std::string_view kind, Point p, double angle = 0.0) {
    LayoutRecord rec;
    rec.tag = std::move(tag);
    rec.kind = std::string(kind);
    rec.x = p.x;
    rec.y = p.y;
    rec.angle = angle;
    return rec;
}

} // namespace movekit::detail
