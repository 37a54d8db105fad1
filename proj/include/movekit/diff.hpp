#pragma once

#include <string>
#include <string_view>

namespace movekit {

/// Line-based unified diff from `expected` to `actual` with three lines of context.
/// Empty when the texts are equal.
std::string unifiedDiff(std::string_view expected, std::string_view actual, std::string_view expectedName,
                        std::string_view actualName);

} // namespace movekit
