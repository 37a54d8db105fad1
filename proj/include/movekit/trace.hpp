#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "movekit/element.hpp"

namespace movekit {

class Scene;

struct TraceDown {
    Point point;
    PointerButton button = PointerButton::Left;
};

struct TraceMove {
    Point point;
};

struct TraceUp {};

/// `assert <path> <field> <value> <tol>`: the path is an element tag optionally followed
/// by child record tags (`plot/s0/c1`); the field is one of the layout record fields.
struct TraceAssert {
    std::string path;
    std::string field;
    double value = 0.0;
    double tolerance = 0.0;
    int column = 0; // of the path
};

using TraceEvent = std::variant<TraceDown, TraceMove, TraceUp, TraceAssert>;

struct TraceLine {
    int line = 0;
    TraceEvent event;
};

/// Malformed trace text, or a trace that cannot run against its scene.
/// Line and column are 1-based.
class TraceError : public std::runtime_error {
public:
    TraceError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// One line per event; blank lines and `#` comments are skipped.
///
///     down <x> <y> L|R
///     move <x> <y>
///     up
///     assert <path> x|y|w|h|angle <value> <tol>
std::vector<TraceLine> parseTrace(std::string_view text);

struct AssertionResult {
    int line = 0;
    std::string path;
    std::string field;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ReplayReport {
    std::string scene;
    std::size_t events = 0;
    std::size_t catches = 0;
    /// Moves that reported a geometry change.
    std::size_t repaints = 0;
    std::vector<AssertionResult> assertions;
    /// Layout document after the last event.
    std::string layout;

    std::size_t failed() const;
    bool passed() const { return failed() == 0; }
    /// Deterministic text rendering of everything above except the layout.
    std::string format() const;
};

/// Value of a record field reached by an assertion path. Throws std::out_of_range
/// for an unknown tag or child and std::invalid_argument for an unknown field.
double recordField(const Scene& scene, std::string_view path, std::string_view field);

/// Applies the trace through the scene's Mover. Throws TraceError when an assertion
/// names an unknown element or field.
ReplayReport runTrace(Scene& scene, const std::vector<TraceLine>& trace);
/// Builds the named catalog scene first; throws std::out_of_range for an unknown name.
ReplayReport runTrace(std::string_view sceneName, const std::vector<TraceLine>& trace);

} // namespace movekit
