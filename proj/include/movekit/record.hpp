#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace movekit {

/// Persisted geometry of one element (or one part of a composite element).
/// The meaning of x/y/w/h/angle depends on `kind`; see README.
struct LayoutRecord {
    std::string tag;
    std::string kind;
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
    double angle = 0.0;
    std::vector<LayoutRecord> children;

    const LayoutRecord* child(std::string_view childTag) const {
        for (const auto& c : children) {
            if (c.tag == childTag) {
                return &c;
            }
        }
        return nullptr;
    }

    bool operator==(const LayoutRecord&) const = default;
};

} // namespace movekit
