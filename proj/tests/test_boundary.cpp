#include <gtest/gtest.h>

#include "movekit/boundary.hpp"
#include "movekit/catalog.hpp"
#include "movekit/layout.hpp"
#include "movekit/trace.hpp"

using namespace movekit;
using nlohmann::json;

namespace {

json call(BoundarySession& s, json request) {
    const json response = s.handle(request);
    EXPECT_TRUE(response.contains("ok"));
    return response;
}

json init(BoundarySession& s, const std::string& scene) {
    const json r = call(s, {{"type", "init"}, {"scene", scene}});
    EXPECT_TRUE(r["ok"].get<bool>()) << r.dump();
    return r;
}

std::size_t countKind(const json& commands, const std::string& kind) {
    std::size_t n = 0;
    for (const json& c : commands) {
        n += c["kind"] == kind ? 1 : 0;
    }
    return n;
}

} // namespace

TEST(Boundary, ListScenes) {
    BoundarySession s;
    const json r = call(s, {{"type", "listScenes"}});
    EXPECT_TRUE(r["ok"].get<bool>());
    EXPECT_EQ(r["scenes"].get<std::vector<std::string>>(), sceneNames());
}

TEST(Boundary, InitReportsSceneExtentAndTags) {
    BoundarySession s;
    const json r = init(s, "nnode");
    EXPECT_EQ(r["scene"], "nnode");
    EXPECT_TRUE(r["extent"]["w"].is_number());
    EXPECT_EQ(r["tags"], json::array({"disc", "ring"}));
    EXPECT_TRUE(s.hasScene());
}

TEST(Boundary, RequestsBeforeInitFail) {
    BoundarySession s;
    const json r = call(s, {{"type", "pointerUp"}});
    EXPECT_FALSE(r["ok"].get<bool>());
    EXPECT_TRUE(r["error"].is_string());
}

TEST(Boundary, MalformedRequests) {
    BoundarySession s;
    EXPECT_FALSE(json::parse(s.handleLine("{not json"))["ok"].get<bool>());
    EXPECT_FALSE(call(s, json::array())["ok"].get<bool>());
    EXPECT_FALSE(call(s, {{"type", "warp"}})["ok"].get<bool>());
    EXPECT_FALSE(call(s, {{"type", "init"}, {"scene", "atlantis"}})["ok"].get<bool>());
    init(s, "calculator");
    EXPECT_FALSE(call(s, {{"type", "pointerDown"}, {"x", "1"}, {"y", 2}})["ok"].get<bool>());
    EXPECT_FALSE(call(s, {{"type", "pointerDown"}, {"x", 1}, {"y", 2}, {"button", "middle"}})["ok"].get<bool>());
    EXPECT_FALSE(call(s, {{"type", "getRenderModel"}, {"overlay", "yes"}})["ok"].get<bool>());
    EXPECT_FALSE(call(s, {{"type", "restoreLayout"}, {"document", "MRL9 calculator\n"}})["ok"].get<bool>());
    // The session survives every error.
    EXPECT_TRUE(call(s, {{"type", "saveLayout"}})["ok"].get<bool>());
}

TEST(Boundary, EchoesId) {
    BoundarySession s;
    EXPECT_EQ(call(s, {{"type", "listScenes"}, {"id", 41}})["id"], 41);
    EXPECT_EQ(call(s, {{"type", "bogus"}, {"id", "x"}})["id"], "x");
}

TEST(Boundary, DragFollowsPointer) {
    BoundarySession s;
    init(s, "calculator");
    const json down = call(s, {{"type", "pointerDown"}, {"x", 74}, {"y", 101}, {"button", "left"}});
    EXPECT_TRUE(down["caught"].get<bool>());
    EXPECT_EQ(down["cursor"], "MoveAll");
    EXPECT_TRUE(call(s, {{"type", "pointerMove"}, {"x", 114}, {"y", 101}})["changed"].get<bool>());
    EXPECT_FALSE(call(s, {{"type", "pointerMove"}, {"x", 114}, {"y", 101}})["changed"].get<bool>());
    const json up = call(s, {{"type", "pointerUp"}});
    EXPECT_EQ(up["released"]["tag"], "d7");
    EXPECT_EQ(call(s, {{"type", "pointerUp"}})["released"], nullptr);
    EXPECT_DOUBLE_EQ(recordField(s.scene(), "d7", "x"), 110);
}

TEST(Boundary, CursorOverResizeNode) {
    BoundarySession s;
    init(s, "calculator");
    // Right-mid node of the display.
    EXPECT_EQ(call(s, {{"type", "getCursor"}, {"x", 309}, {"y", 34}})["cursor"], "SizeWE");
    EXPECT_EQ(call(s, {{"type", "getCursor"}, {"x", 150}, {"y", 34}})["cursor"], "Default");
}

TEST(Boundary, RightDragRotatesPolygon) {
    BoundarySession s;
    init(s, "polygon");
    EXPECT_TRUE(call(s, {{"type", "pointerDown"}, {"x", 230}, {"y", 160}, {"button", "right"}})["caught"].get<bool>());
    EXPECT_TRUE(call(s, {{"type", "pointerMove"}, {"x", 200}, {"y", 190}})["changed"].get<bool>());
    call(s, {{"type", "pointerUp"}});
    EXPECT_NEAR(recordField(s.scene(), "hexagon", "angle"), 1.5707963267948966, 1e-12);
}

TEST(Boundary, RenderModelOverlayAddsDebugNodes) {
    BoundarySession s;
    init(s, "polygon");
    const json plain = call(s, {{"type", "getRenderModel"}})["commands"];
    const json overlay = call(s, {{"type", "getRenderModel"}, {"overlay", true}})["commands"];
    EXPECT_EQ(countKind(plain, "debugNode"), 0u);
    // 6 apexes, the center, 6 edges and the body.
    EXPECT_EQ(countKind(overlay, "debugNode"), 14u);
    for (const json& c : overlay) {
        if (c["kind"] == "debugNode") {
            EXPECT_TRUE(c["shape"]["type"] == "circle" || c["shape"]["type"] == "capsule" ||
                        c["shape"]["type"] == "polygon");
            EXPECT_TRUE(c["freedom"].is_string());
        }
    }
}

TEST(Boundary, RenderModelShapes) {
    BoundarySession s;
    init(s, "panels");
    const json commands = call(s, {{"type", "getRenderModel"}})["commands"];
    ASSERT_FALSE(commands.empty());
    EXPECT_GT(countKind(commands, "rect"), 0u);
    EXPECT_GT(countKind(commands, "polygon"), 0u);
    EXPECT_GT(countKind(commands, "circle"), 0u);
    EXPECT_GT(countKind(commands, "text"), 0u);
    for (const json& c : commands) {
        if (c["kind"] == "text") {
            EXPECT_EQ(c["position"].size(), 2u);
        }
    }
}

TEST(Boundary, SaveThenLoadRoundTrips) {
    BoundarySession s;
    init(s, "plots");
    const json before = call(s, {{"type", "getRenderModel"}})["commands"];
    const std::string doc = call(s, {{"type", "saveLayout"}})["document"];
    call(s, {{"type", "pointerDown"}, {"x", 200}, {"y", 140}});
    call(s, {{"type", "pointerMove"}, {"x", 230}, {"y", 150}});
    call(s, {{"type", "pointerUp"}});
    EXPECT_NE(call(s, {{"type", "getRenderModel"}})["commands"], before);
    const json restored = call(s, {{"type", "restoreLayout"}, {"document", doc}});
    EXPECT_TRUE(restored["ok"].get<bool>());
    EXPECT_TRUE(restored["warnings"].empty());
    EXPECT_EQ(call(s, {{"type", "getRenderModel"}})["commands"], before);
}

TEST(Boundary, InvalidUploadReportsParserMessage) {
    BoundarySession s;
    init(s, "calculator");
    const json r = call(s, {{"type", "restoreLayout"}, {"document", "MRL1 calculator\nd7 control 1 2\n"}});
    EXPECT_FALSE(r["ok"].get<bool>());
    EXPECT_NE(r["error"].get<std::string>().find("line 2"), std::string::npos);
}

TEST(Boundary, ScriptedSessionMatchesReplay) {
    const std::string trace = "down 74 101 L\nmove 94 101\nmove 114 120\nup\n"
                              "down 309 34 L\nmove 359 34\nup\n"
                              "down 88 118 L\nmove 10 10\nup\n";
    const ReplayReport report = runTrace("calculator", parseTrace(trace));

    BoundarySession s;
    init(s, "calculator");
    for (const TraceLine& line : parseTrace(trace)) {
        std::visit(
            [&](const auto& e) {
                using E = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<E, TraceDown>) {
                    call(s, {{"type", "pointerDown"},
                             {"x", e.point.x},
                             {"y", e.point.y},
                             {"button", e.button == PointerButton::Left ? "left" : "right"}});
                } else if constexpr (std::is_same_v<E, TraceMove>) {
                    call(s, {{"type", "pointerMove"}, {"x", e.point.x}, {"y", e.point.y}});
                } else if constexpr (std::is_same_v<E, TraceUp>) {
                    call(s, {{"type", "pointerUp"}});
                }
            },
            line.event);
    }
    EXPECT_EQ(call(s, {{"type", "saveLayout"}})["document"].get<std::string>(), report.layout);
}

TEST(Boundary, HandleLineIsOneJsonLine) {
    BoundarySession s;
    const std::string out = s.handleLine(R"({"type":"listScenes","id":1})");
    EXPECT_EQ(out.find('\n'), std::string::npos);
    EXPECT_EQ(json::parse(out)["id"], 1);
}
