#include <gtest/gtest.h>

#include "movekit/catalog.hpp"
#include "movekit/elements/dependent_frame.hpp"
#include "movekit/elements/framed_control.hpp"
#include "movekit/fuzz.hpp"
#include "movekit/scene.hpp"

using namespace movekit;

namespace {

// Resizes correctly but reports no change.
class SilentControl : public FramedControl {
public:
    using FramedControl::FramedControl;
    bool moveNode(const NodeDrag& drag) override {
        FramedControl::moveNode(drag);
        return false;
    }
};

// Shifts itself when pressed.
class JumpyControl : public FramedControl {
public:
    using FramedControl::FramedControl;
    void onCatch(std::size_t node, PointerButton button) override {
        FramedControl::onCatch(node, button);
        move(1, 0);
    }
};

// Lets resize drags ignore the size limits.
class UnclampedControl : public FramedControl {
public:
    UnclampedControl(Rect rect, SizeLimits shown)
        : FramedControl(rect, {{1, 1}, {10000, 10000}}), shown_(shown) {}
    void checkInvariants(std::vector<std::string>& violations) const override {
        if (!shown_.admits(rect().size())) {
            violations.push_back("size outside limits");
        }
    }

private:
    SizeLimits shown_;
};

std::unique_ptr<Scene> sceneWith(std::unique_ptr<Element> element) {
    auto scene = std::make_unique<Scene>("probe", Size{300, 200});
    scene->add("probe", std::move(element));
    return scene;
}

FuzzReport fuzz(Scene& scene, std::size_t steps, std::uint64_t seed) {
    Fuzzer fuzzer(scene, seed);
    fuzzer.run(steps);
    return fuzzer.finish();
}

} // namespace

TEST(Fnv1a, KnownVectors) {
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a("foobar"), 0x85944171f73967e8ULL);
}

TEST(Fuzz, SameSeedSameReport) {
    for (const std::string& name : sceneNames()) {
        const FuzzReport a = fuzzScene(name, 1500, 7);
        const FuzzReport b = fuzzScene(name, 1500, 7);
        EXPECT_EQ(a.format(), b.format()) << name;
        EXPECT_EQ(a.layout, b.layout) << name;
    }
}

TEST(Fuzz, SeedsDiverge) {
    EXPECT_NE(fuzzScene("polygon", 500, 1).layoutHash, fuzzScene("polygon", 500, 2).layoutHash);
}

TEST(Fuzz, EveryCatalogSceneStaysClean) {
    for (const std::string& name : sceneNames()) {
        const FuzzReport report = fuzzScene(name, 3000, 3);
        EXPECT_TRUE(report.ok()) << report.format();
        EXPECT_EQ(report.steps, 3000u);
        EXPECT_GT(report.catches, 0u) << name;
        EXPECT_GT(report.repaints, 0u) << name;
    }
}

TEST(Fuzz, ReportFormat) {
    const FuzzReport report = fuzzScene("nnode", 50, 5);
    const std::string text = report.format();
    EXPECT_EQ(text.rfind("scene nnode\n", 0), 0u);
    char hash[32];
    std::snprintf(hash, sizeof hash, "layout-fnv1a %016llx\n", static_cast<unsigned long long>(report.layoutHash));
    EXPECT_EQ(text.substr(text.size() - std::string(hash).size()), hash);
    EXPECT_EQ(report.layoutHash, fnv1a(report.layout));
}

TEST(FuzzAudit, DetectsUnreportedChange) {
    auto scene = sceneWith(std::make_unique<SilentControl>(Rect{100, 80, 100, 40}, SizeLimits{{40, 20}, {200, 90}}));
    const FuzzReport report = fuzz(*scene, 2000, 1);
    EXPECT_FALSE(report.ok());
    ASSERT_FALSE(report.violations.empty());
    EXPECT_LE(report.violations.size(), Fuzzer::kMaxReportedViolations);
}

TEST(FuzzAudit, DetectsGeometryChangeOnPress) {
    auto scene = sceneWith(std::make_unique<JumpyControl>(Rect{100, 80, 100, 40}, SizeLimits{{40, 20}, {200, 90}}));
    EXPECT_FALSE(fuzz(*scene, 500, 1).ok());
}

TEST(FuzzAudit, DetectsElementInvariant) {
    auto scene =
        sceneWith(std::make_unique<UnclampedControl>(Rect{100, 80, 100, 40}, SizeLimits{{80, 30}, {120, 50}}));
    EXPECT_FALSE(fuzz(*scene, 2000, 1).ok());
}

TEST(FuzzAudit, DependentFrameOracleAgrees) {
    Scene scene("df");
    auto& a = scene.emplace<FramedControl>("a", Rect{10, 10, 50, 30}, SizeLimits{{10, 10}, {200, 200}});
    scene.emplace<FramedControl>("b", Rect{60, 50, 50, 40}, SizeLimits{{10, 10}, {200, 200}});
    std::vector<Element*> children{&a};
    scene.emplace<DependentFrame>("f", children, 8.0);
    EXPECT_TRUE(Fuzzer::auditScene(scene).empty());
}

TEST(FuzzAudit, CleanControlPasses) {
    auto scene = sceneWith(std::make_unique<FramedControl>(Rect{100, 80, 100, 40}, SizeLimits{{40, 20}, {200, 90}}));
    EXPECT_TRUE(fuzz(*scene, 3000, 1).ok());
}
