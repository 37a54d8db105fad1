#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "movekit/element.hpp"

namespace movekit {

enum class Side { Left, Right, Top, Bottom };

/// A scale attached to one side of the plotting area. Its length always follows that
/// side; `offset` is its displacement from the attached position.
struct ScaleSpec {
    Side side = Side::Bottom;
    Point offset;
    double thickness = 24.0;
};

/// A comment placed relative to its owner: the area (owner < 0) or a scale (owner = index).
struct PlotComment {
    std::string text;
    int owner = -1;
    Point anchor; // comment center in units of the owner's size
    Angle angle;
};

/// Plotting area with its scales and comments, moved in sync as one parent-child
/// structure. Parent-relative data is the only stored state; every absolute
/// position is derived from it.
///
/// Cover: comments first, then scales, then the area's border resize nodes and body.
class PlotComposite : public Element {
public:
    static constexpr double kBorderHalfWidth = 3.0;

    /// Throws std::invalid_argument for an area outside its limits, a degenerate scale,
    /// or a comment owned by a missing scale.
    PlotComposite(Rect area, SizeLimits areaLimits, std::vector<ScaleSpec> scales, std::vector<PlotComment> comments,
                  std::string title = {});

    const Rect& area() const { return area_; }
    const SizeLimits& areaLimits() const { return areaLimits_; }
    const std::vector<ScaleSpec>& scales() const { return scales_; }
    const std::vector<PlotComment>& comments() const { return comments_; }
    const std::string& title() const { return title_; }

    Rect scaleRect(std::size_t i) const;
    Rect ownerRect(int owner) const;
    Point commentCenter(std::size_t i) const;
    std::array<Point, 4> commentCorners(std::size_t i) const;

    std::size_t firstScaleNode() const { return comments_.size(); }
    std::size_t firstAreaNode() const { return comments_.size() + scales_.size(); }

    std::string_view kind() const override { return "plot"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override { area_ = area_.translated(dx, dy); }
    bool moveNode(const NodeDrag& drag) override;
    Rect bounds() const override;
    bool canRotate(std::size_t node) const override { return node < comments_.size(); }
    Point rotationPivot(std::size_t node) const override;
    void onCatch(std::size_t node, PointerButton button) override;
    void onRelease() override { drag_.reset(); }
    LayoutRecord saveRecord() const override;
    void restoreRecord(const LayoutRecord& record, std::vector<std::string>& warnings) override;
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    struct Drag {
        std::size_t node;
        Rect area;
        Point point; // anchor or offset at catch
        Point total;
    };

    Rect area_;
    SizeLimits areaLimits_;
    ResizePolicy policy_;
    std::vector<FrameHandle> handles_;
    std::vector<ScaleSpec> scales_;
    std::vector<PlotComment> comments_;
    std::string title_;
    std::optional<Drag> drag_;
};

} // namespace movekit
