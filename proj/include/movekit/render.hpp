#pragma once

#include <string>
#include <variant>
#include <vector>

#include "movekit/cover.hpp"
#include "movekit/geometry.hpp"

namespace movekit {

struct FilledRect {
    Rect rect;
    std::string style;
};

struct PolygonOutline {
    std::vector<Point> vertices;
    std::string style;
};

struct CircleOutline {
    Point center;
    double radius = 0.0;
    std::string style;
};

struct TextCommand {
    std::string content;
    Point position; // center of the text box
    Angle angle;
    std::string style;
};

/// Emitted only when the cover overlay is enabled.
struct DebugNode {
    NodeShape shape;
    Freedom freedom = Freedom::None;
};

using DrawCommand = std::variant<FilledRect, PolygonOutline, CircleOutline, TextCommand, DebugNode>;

/// Back-to-front list of draw commands for a host renderer.
struct RenderModel {
    std::vector<DrawCommand> commands;

    void rect(const Rect& r, std::string style) { commands.emplace_back(FilledRect{r, std::move(style)}); }
    void polygon(std::vector<Point> v, std::string style) {
        commands.emplace_back(PolygonOutline{std::move(v), std::move(style)});
    }
    void circle(Point c, double r, std::string style) { commands.emplace_back(CircleOutline{c, r, std::move(style)}); }
    void text(std::string content, Point pos, Angle angle, std::string style) {
        commands.emplace_back(TextCommand{std::move(content), pos, angle, std::move(style)});
    }
    void overlay(const Cover& cover) {
        for (const CoverNode& n : cover.nodes()) {
            commands.emplace_back(DebugNode{n.shape(), n.freedom()});
        }
    }
};

} // namespace movekit
