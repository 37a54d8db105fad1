#pragma once

#include <string>
#include <vector>

#include "movekit/element.hpp"

namespace movekit {

/// A group defined from inside: its children are registered with the Mover on their
/// own and rearranged individually, and the frame is always the union of their
/// bounds expanded by `margin`. Grabbing the frame band moves every child.
///
/// The children are not owned; they must outlive the frame.
class DependentFrame : public Element {
public:
    /// Throws std::invalid_argument for an empty child list or non-positive margin.
    DependentFrame(std::vector<Element*> children, double margin, std::string title = {});

    Rect frame() const;
    double margin() const { return margin_; }
    const std::vector<Element*>& children() const { return children_; }
    const std::string& title() const { return title_; }

    std::string_view kind() const override { return "dependent"; }
    Cover defineCover() const override;
    void move(double dx, double dy) override;
    bool moveNode(const NodeDrag& /*drag*/) override { return false; }
    Rect bounds() const override { return frame(); }
    LayoutRecord saveRecord() const override;
    /// The frame is derived, so a saved frame is informational only.
    void restoreRecord(const LayoutRecord& /*record*/, std::vector<std::string>& /*warnings*/) override {}
    void render(RenderModel& model) const override;
    void checkInvariants(std::vector<std::string>& violations) const override;

private:
    Rect childUnion() const;

    std::vector<Element*> children_;
    double margin_;
    std::string title_;
};

} // namespace movekit
