#include <gtest/gtest.h>

#include <numbers>

#include "movekit/elements/framed_control.hpp"
#include "movekit/elements/linked_rectangles.hpp"
#include "movekit/mover.hpp"

using namespace movekit;

namespace {

/// Square with an interior body node and, optionally, a vertical handle strip on its
/// right edge. Records everything the Mover delivers.
class Probe : public Element {
public:
    explicit Probe(Rect rect, bool rotatable = false) : rect_(rect), rotatable_(rotatable) {}

    std::string_view kind() const override { return "probe"; }
    Cover defineCover() const override {
        Cover cover;
        cover.add(CoverNode::rect({rect_.right() - 4, rect_.y, 8, rect_.h}, handleFreedom, Cursor::SizeNS));
        cover.add(CoverNode::rect(rect_, Freedom::None, Cursor::MoveAll));
        return cover;
    }
    void move(double dx, double dy) override {
        rect_ = rect_.translated(dx, dy);
        ++moves;
    }
    bool moveNode(const NodeDrag& drag) override {
        drags.push_back(drag);
        return true;
    }
    Rect bounds() const override { return rect_; }
    bool canRotate(std::size_t /*node*/) const override { return rotatable_; }
    void onCatch(std::size_t node, PointerButton /*button*/) override { catches.push_back(node); }
    void onRelease() override { ++releases; }
    LayoutRecord saveRecord() const override { return {}; }
    void restoreRecord(const LayoutRecord& /*record*/, std::vector<std::string>& /*warnings*/) override {}
    void render(RenderModel& /*model*/) const override {}

    Freedom handleFreedom = Freedom::NS;
    std::vector<NodeDrag> drags;
    std::vector<std::size_t> catches;
    int moves = 0;
    int releases = 0;

private:
    Rect rect_;
    bool rotatable_;
};

/// Topmost registered element whose cover contains p, by scanning the registry from the top.
std::optional<ElementId> topmostOracle(const Mover& mover, Point p) {
    const auto order = mover.zOrder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (mover.cover(*it).hit(p)) {
            return *it;
        }
    }
    return std::nullopt;
}

} // namespace

TEST(MoverRegister, DistinctIdsInRegistrationOrder) {
    Probe a({0, 0, 10, 10}), b({0, 0, 10, 10}), c({0, 0, 10, 10});
    Mover mover;
    const ElementId ia = mover.add(a);
    const ElementId ib = mover.add(b);
    const ElementId ic = mover.add(c);
    EXPECT_NE(ia, ib);
    EXPECT_NE(ib, ic);
    EXPECT_NE(ia, ic);
    EXPECT_EQ(mover.zOrder(), (std::vector<ElementId>{ia, ib, ic}));
}

TEST(MoverRegister, AutoFramePolicyFromLimits) {
    FramedControl wide({0, 0, 100, 30}, {{60, 30}, {200, 30}});
    FramedControl fixed({200, 0, 60, 30}, {{60, 30}, {60, 30}});
    Mover mover;
    EXPECT_EQ(mover.autoFramePolicy(mover.add(wide, SizeLimits{{60, 30}, {200, 30}})), ResizePolicy::WEOnly);
    EXPECT_EQ(mover.autoFramePolicy(mover.add(fixed, SizeLimits{{60, 30}, {60, 30}})), ResizePolicy::NoResize);
}

TEST(MoverRegister, DuplicateThrows) {
    Probe a({0, 0, 10, 10});
    Mover mover;
    mover.add(a);
    EXPECT_THROW(mover.add(a), std::invalid_argument);
}

TEST(MoverCatch, InteriorBodyForward) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    mover.add(a);
    EXPECT_TRUE(mover.catchAt({25, 25}, PointerButton::Left));
    const auto& caught = std::get<Caught>(mover.state());
    EXPECT_EQ(caught.mode, DragMode::Forward);
    EXPECT_EQ(caught.node, 1u);
}

TEST(MoverCatch, Miss) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    mover.add(a);
    EXPECT_FALSE(mover.catchAt({500, 500}, PointerButton::Left));
    EXPECT_FALSE(mover.isCaught());
}

TEST(MoverCatch, TopmostWinsAndDoesNotRaise) {
    Probe bottom({0, 0, 50, 50}), top({20, 20, 50, 50});
    Mover mover;
    const ElementId ib = mover.add(bottom);
    const ElementId it = mover.add(top);
    ASSERT_EQ(topmostOracle(mover, {30, 30}), it);
    ASSERT_TRUE(mover.catchAt({30, 30}, PointerButton::Left));
    EXPECT_EQ(std::get<Caught>(mover.state()).element, it);
    EXPECT_EQ(mover.zOrder(), (std::vector<ElementId>{ib, it}));
}

TEST(MoverCatch, AgreesWithZOrderOracle) {
    std::vector<std::unique_ptr<Probe>> probes;
    Mover mover;
    for (int i = 0; i < 12; ++i) {
        probes.push_back(std::make_unique<Probe>(Rect{7.0 * (i % 5), 11.0 * (i % 3), 40, 30}));
        mover.add(*probes.back());
    }
    mover.bringToFront(mover.zOrder()[3]);
    for (double x = -5; x < 80; x += 2.5) {
        for (double y = -5; y < 70; y += 2.5) {
            const auto expected = topmostOracle(mover, {x, y});
            const bool caught = mover.catchAt({x, y}, PointerButton::Left);
            ASSERT_EQ(caught, expected.has_value());
            if (caught) {
                EXPECT_EQ(std::get<Caught>(mover.state()).element, *expected);
            }
            mover.release();
        }
    }
}

TEST(MoverCatch, RightOnNonRotatableCatchesNothing) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    mover.add(a);
    EXPECT_FALSE(mover.catchAt({25, 25}, PointerButton::Right));
    EXPECT_FALSE(mover.isCaught());
    EXPECT_TRUE(a.catches.empty());
}

TEST(MoverCatch, RightOnRotatableStartsRotation) {
    Probe a({0, 0, 50, 50}, true);
    Mover mover;
    mover.add(a);
    ASSERT_TRUE(mover.catchAt({50, 25}, PointerButton::Right));
    const auto& caught = std::get<Caught>(mover.state());
    EXPECT_EQ(caught.mode, DragMode::Rotate);
    EXPECT_EQ(caught.pivot, (Point{25, 25}));
    EXPECT_DOUBLE_EQ(caught.grabAngle.radians, 0.0);

    // A quarter turn clockwise on screen: from east of the pivot to south of it.
    EXPECT_TRUE(mover.move({25, 50}));
    ASSERT_EQ(a.drags.size(), 1u);
    EXPECT_NEAR(a.drags[0].turn.radians, std::numbers::pi / 2, 1e-15);
    EXPECT_EQ(a.drags[0].button, PointerButton::Right);
    EXPECT_EQ(a.drags[0].pivot, (Point{25, 25}));
    // The next event delivers only the increment.
    EXPECT_TRUE(mover.move({0, 25}));
    EXPECT_NEAR(a.drags[1].turn.radians, std::numbers::pi / 2, 1e-15);
    // Crossing the -x axis does not produce a full-turn jump.
    EXPECT_TRUE(mover.move({25, 0}));
    EXPECT_NEAR(a.drags[2].turn.radians, std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(std::get<Caught>(mover.state()).applied.radians, 3 * std::numbers::pi / 2, 1e-12);
}

TEST(MoverCatch, CatchWhileCaughtReleasesFirst) {
    Probe a({0, 0, 50, 50}), b({100, 0, 50, 50});
    Mover mover;
    mover.add(a);
    const ElementId ib = mover.add(b);
    ASSERT_TRUE(mover.catchAt({25, 25}, PointerButton::Left));
    ASSERT_TRUE(mover.catchAt({125, 25}, PointerButton::Left));
    EXPECT_EQ(a.releases, 1);
    EXPECT_EQ(std::get<Caught>(mover.state()).element, ib);
}

TEST(MoverMove, FreedomNoneTranslatesWholeElement) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    mover.add(a);
    ASSERT_TRUE(mover.catchAt({25, 25}, PointerButton::Left));
    EXPECT_TRUE(mover.move({35, 30}));
    EXPECT_EQ(a.bounds(), (Rect{10, 5, 50, 50}));
    EXPECT_TRUE(a.drags.empty());
}

TEST(MoverMove, NSFreedomDropsHorizontalDisplacement) {
    Probe a({-46, -25, 50, 50});
    Mover mover;
    mover.add(a);
    ASSERT_TRUE(mover.catchAt({0, 0}, PointerButton::Left));
    ASSERT_EQ(std::get<Caught>(mover.state()).node, 0u);
    EXPECT_TRUE(mover.move({7, 4}));
    ASSERT_EQ(a.drags.size(), 1u);
    EXPECT_EQ(a.drags[0].dx, 0.0);
    EXPECT_EQ(a.drags[0].dy, 4.0);
    EXPECT_EQ(a.drags[0].pointer, (Point{7, 4}));
}

TEST(MoverMove, WEFreedomDropsVerticalDisplacement) {
    Probe a({-46, -25, 50, 50});
    a.handleFreedom = Freedom::WE;
    Mover mover;
    mover.add(a);
    ASSERT_TRUE(mover.catchAt({0, 0}, PointerButton::Left));
    EXPECT_TRUE(mover.move({7, 4}));
    EXPECT_EQ(a.drags[0].dx, 7.0);
    EXPECT_EQ(a.drags[0].dy, 0.0);
    // Pure vertical motion on a WE node changes nothing.
    EXPECT_FALSE(mover.move({7, 40}));
    EXPECT_EQ(a.drags.size(), 1u);
}

TEST(MoverMove, IdleReturnsFalse) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    mover.add(a);
    EXPECT_FALSE(mover.move({10, 10}));
    EXPECT_EQ(a.moves, 0);
}

TEST(MoverMove, RejectsNonFinitePoints) {
    Mover mover;
    EXPECT_THROW(mover.move({NAN, 0}), std::invalid_argument);
    EXPECT_THROW(mover.catchAt({0, INFINITY}, PointerButton::Left), std::invalid_argument);
}

TEST(MoverRelease, ReturnsCaughtPair) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    const ElementId id = mover.add(a);
    ASSERT_TRUE(mover.catchAt({25, 25}, PointerButton::Left));
    EXPECT_EQ(mover.release(), (CaughtNode{id, 1}));
    EXPECT_EQ(a.releases, 1);
}

TEST(MoverRelease, IdleReturnsNothing) {
    Mover mover;
    EXPECT_FALSE(mover.release().has_value());
}

TEST(MoverRelease, SecondReleaseIsEmpty) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    mover.add(a);
    ASSERT_TRUE(mover.catchAt({25, 25}, PointerButton::Left));
    EXPECT_TRUE(mover.release().has_value());
    EXPECT_FALSE(mover.release().has_value());
    EXPECT_EQ(a.releases, 1);
}

TEST(MoverCursor, ResizeNode) {
    FramedControl c({0, 0, 100, 60}, {{50, 60}, {200, 60}});
    Mover mover;
    mover.add(c);
    EXPECT_EQ(mover.cursor({-3, 30}), Cursor::SizeWE);
}

TEST(MoverCursor, EmptySpace) {
    Probe a({0, 0, 50, 50});
    Mover mover;
    mover.add(a);
    EXPECT_EQ(mover.cursor({300, 300}), Cursor::Default);
}

TEST(MoverCursor, TopmostAtOverlap) {
    Probe bottom({-46, -25, 50, 50}), top({-25, -25, 50, 50});
    Mover mover;
    mover.add(bottom);
    const ElementId it = mover.add(top);
    ASSERT_EQ(topmostOracle(mover, {0, 0}), it);
    EXPECT_EQ(mover.cursor({0, 0}), Cursor::MoveAll);
    mover.bringToFront(mover.zOrder()[0]);
    EXPECT_EQ(mover.cursor({0, 0}), Cursor::SizeNS);
}

TEST(MoverCursor, CaughtNodeCursorRegardlessOfPoint) {
    Probe a({-46, -25, 50, 50});
    Mover mover;
    mover.add(a);
    ASSERT_TRUE(mover.catchAt({0, 0}, PointerButton::Left));
    EXPECT_EQ(mover.cursor({900, 900}), Cursor::SizeNS);
}

TEST(MoverRegistry, BringToFrontWinsOverlap) {
    Probe bottom({0, 0, 50, 50}), top({20, 20, 50, 50});
    Mover mover;
    const ElementId ib = mover.add(bottom);
    mover.add(top);
    mover.bringToFront(ib);
    ASSERT_TRUE(mover.catchAt({30, 30}, PointerButton::Left));
    EXPECT_EQ(std::get<Caught>(mover.state()).element, ib);
}

TEST(MoverRegistry, RemoveCaughtReleasesFirst) {
    Probe a({0, 0, 50, 50}), b({100, 0, 50, 50});
    Mover mover;
    const ElementId ia = mover.add(a);
    const ElementId ib = mover.add(b);
    ASSERT_TRUE(mover.catchAt({25, 25}, PointerButton::Left));
    mover.remove(ia);
    EXPECT_FALSE(mover.isCaught());
    EXPECT_EQ(a.releases, 1);
    EXPECT_EQ(mover.zOrder(), (std::vector<ElementId>{ib}));
    EXPECT_FALSE(mover.contains(ia));
}

TEST(MoverRegistry, UnknownIdThrows) {
    Mover mover;
    EXPECT_THROW(mover.remove(ElementId{42}), std::out_of_range);
    EXPECT_THROW(mover.bringToFront(ElementId{42}), std::out_of_range);
    EXPECT_THROW(mover.element(ElementId{42}), std::out_of_range);
}

TEST(MoverRegistry, IdsAreNeverReused) {
    Probe a({0, 0, 10, 10}), b({0, 0, 10, 10});
    Mover mover;
    const ElementId ia = mover.add(a);
    mover.remove(ia);
    EXPECT_NE(mover.add(b), ia);
}

TEST(MoverRegistry, SetZOrderRequiresPermutation) {
    Probe a({0, 0, 10, 10}), b({0, 0, 10, 10});
    Mover mover;
    const ElementId ia = mover.add(a);
    const ElementId ib = mover.add(b);
    mover.setZOrder({ib, ia});
    EXPECT_EQ(mover.zOrder(), (std::vector<ElementId>{ib, ia}));
    EXPECT_THROW(mover.setZOrder({ib, ib}), std::invalid_argument);
    EXPECT_THROW(mover.setZOrder({ib}), std::invalid_argument);
    EXPECT_EQ(mover.zOrder(), (std::vector<ElementId>{ib, ia}));
}

TEST(MoverAutoFrame, ResizesThroughTheFrame) {
    FramedControl c({10, 10, 100, 30}, {{60, 30}, {200, 30}});
    Mover mover;
    const ElementId id = mover.add(c, SizeLimits{{60, 30}, {200, 30}});
    EXPECT_EQ(mover.cover(id).size(), 6u);
    ASSERT_TRUE(mover.catchAt({113, 25}, PointerButton::Left));
    EXPECT_TRUE(mover.move({263, 25}));
    EXPECT_EQ(c.rect(), (Rect{10, 10, 200, 30}));
    mover.release();
    ASSERT_TRUE(mover.catchAt({50, 7}, PointerButton::Left));
    EXPECT_TRUE(mover.move({65, 14}));
    EXPECT_EQ(c.rect(), (Rect{25, 17, 200, 30}));
}

TEST(MoverAutoFrame, FrameWidthIsAdjustable) {
    FramedControl c({10, 10, 100, 30}, {{60, 30}, {200, 30}});
    Mover mover;
    const ElementId id = mover.add(c, SizeLimits{{60, 30}, {200, 30}});
    EXPECT_FALSE(mover.cover(id).hit({0, 25}).has_value());
    mover.setFrameWidth(12);
    EXPECT_TRUE(mover.cover(id).hit({0, 25}).has_value());
    EXPECT_THROW(mover.setFrameWidth(0), std::invalid_argument);
}

TEST(MoverAutoFrame, ElementWithoutResizeToRejectsResize) {
    LinkedRectangles linked({{10, 10, 100, 30}});
    Mover mover;
    mover.add(linked, SizeLimits{{60, 30}, {200, 30}});
    ASSERT_TRUE(mover.catchAt({113, 25}, PointerButton::Left));
    EXPECT_THROW(mover.move({150, 25}), std::logic_error);
}
