#include "movekit/catalog.hpp"

#include <array>
#include <numbers>
#include <stdexcept>

#include "movekit/elements/chatoyant_polygon.hpp"
#include "movekit/elements/commented_control.hpp"
#include "movekit/elements/dependent_frame.hpp"
#include "movekit/elements/framed_control.hpp"
#include "movekit/elements/group.hpp"
#include "movekit/elements/linked_rectangles.hpp"
#include "movekit/elements/nnode_figure.hpp"
#include "movekit/elements/plot_composite.hpp"

namespace movekit {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

const SizeLimits kFixedButton{{36, 28}, {36, 28}};
const SizeLimits kDigitButton{{36, 28}, {80, 56}};
const SizeLimits kTallButton{{36, 28}, {36, 70}};
const SizeLimits kWideButton{{60, 28}, {120, 28}};

/// Calculator keypad: memory keys, digits, operators. Keys sit on a 50 x 42 grid of
/// 36 x 28 buttons, so neighbouring frames do not overlap.
std::unique_ptr<Scene> calculator() {
    auto scene = std::make_unique<Scene>("calculator");
    scene->emplace<FramedControl>("display", Rect{20, 20, 286, 28}, SizeLimits{{150, 28}, {400, 28}}, "0.");

    const std::array<const char*, 3> editTags{"back", "ce", "c"};
    const std::array<const char*, 3> editLabels{"Backspace", "CE", "C"};
    for (std::size_t i = 0; i < editTags.size(); ++i) {
        scene->emplace<FramedControl>(editTags[i], Rect{20 + 100.0 * static_cast<double>(i), 62, 86, 28}, kWideButton,
                                      editLabels[i]);
    }

    struct Key {
        const char* tag;
        const char* label;
        const SizeLimits* limits;
    };
    const std::array<std::array<Key, 6>, 4> rows{{
        {{{"mc", "MC", &kFixedButton},
          {"d7", "7", &kDigitButton},
          {"d8", "8", &kDigitButton},
          {"d9", "9", &kDigitButton},
          {"div", "/", &kTallButton},
          {"sqrt", "sqrt", &kTallButton}}},
        {{{"mr", "MR", &kFixedButton},
          {"d4", "4", &kDigitButton},
          {"d5", "5", &kDigitButton},
          {"d6", "6", &kDigitButton},
          {"mul", "*", &kTallButton},
          {"pct", "%", &kTallButton}}},
        {{{"ms", "MS", &kFixedButton},
          {"d1", "1", &kDigitButton},
          {"d2", "2", &kDigitButton},
          {"d3", "3", &kDigitButton},
          {"sub", "-", &kTallButton},
          {"inv", "1/x", &kTallButton}}},
        {{{"mplus", "M+", &kFixedButton},
          {"d0", "0", &kDigitButton},
          {"sign", "+/-", &kDigitButton},
          {"dot", ".", &kDigitButton},
          {"add", "+", &kTallButton},
          {"eq", "=", &kTallButton}}},
    }};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const Key& key = rows[r][c];
            const Rect rect{20 + 50.0 * static_cast<double>(c), 104 + 42.0 * static_cast<double>(r), 36, 28};
            scene->emplace<FramedControl>(key.tag, rect, *key.limits, key.label);
        }
    }
    return scene;
}

/// Stacks `count` controls inside a titled frame; their height follows the frame.
GroupLayoutRule stackRule(int count) {
    return [count](const Rect& f) {
        const double step = (f.h - 32) / count;
        std::vector<Rect> out;
        for (int i = 0; i < count; ++i) {
            out.push_back({f.x + 10, f.y + 28 + step * i, f.w - 20, step - 4});
        }
        return out;
    };
}

std::unique_ptr<Scene> dataSelection() {
    auto scene = std::make_unique<Scene>("data-selection");
    scene->emplace<Group>("columns", Rect{20, 20, 160, 240}, "Columns", SizeLimits{{100, 100}, {180, 500}},
                          stackRule(4), std::vector<std::string>{"Open", "High", "Low", "Close"});
    scene->emplace<Group>("rows", Rect{220, 20, 150, 200}, "Rows", SizeLimits{{150, 100}, {150, 500}}, stackRule(3),
                          std::vector<std::string>{"All", "Last 100", "Selected"});
    scene->emplace<FramedControl>("ok", Rect{420, 20, 80, 28}, SizeLimits{{60, 24}, {160, 48}}, "OK");
    return scene;
}

std::unique_ptr<CommentedControl> field(Rect rect, std::string label) {
    const double anchorX = -(static_cast<double>(label.size()) * 3.5 + 8) / rect.w;
    return std::make_unique<CommentedControl>(FramedControl(rect, SizeLimits{{60, 24}, {300, 24}}), std::move(label),
                                              Point{anchorX, 0.5});
}

/// Adds `frame` first so that its children stay above its band.
void addDependent(Scene& scene, const std::string& tag, double margin, std::string title,
                  std::vector<std::pair<std::string, std::unique_ptr<Element>>> children) {
    std::vector<Element*> raw;
    for (auto& child : children) {
        raw.push_back(child.second.get());
    }
    scene.add(tag, std::make_unique<DependentFrame>(std::move(raw), margin, std::move(title)));
    for (auto& child : children) {
        scene.add(child.first, std::move(child.second));
    }
}

std::unique_ptr<Scene> personalInfo() {
    auto scene = std::make_unique<Scene>("personal-info");
    std::vector<std::pair<std::string, std::unique_ptr<Element>>> name;
    name.emplace_back("first", field({120, 40, 140, 24}, "First name"));
    name.emplace_back("last", field({120, 80, 140, 24}, "Last name"));
    addDependent(*scene, "name", 10, "Name", std::move(name));

    std::vector<std::pair<std::string, std::unique_ptr<Element>>> address;
    address.emplace_back("street", field({120, 180, 200, 24}, "Street"));
    address.emplace_back("city", field({120, 220, 140, 24}, "City"));
    address.emplace_back("zip", field({340, 220, 70, 24}, "ZIP"));
    addDependent(*scene, "address", 10, "Address", std::move(address));

    scene->emplace<FramedControl>("save", Rect{440, 40, 80, 28}, SizeLimits{{60, 24}, {160, 48}}, "Save");
    return scene;
}

PlotComposite samplePlot(Rect area, Side valueSide, Side argumentSide, std::string title) {
    const SizeLimits limits{{120, 80}, {600, 400}};
    std::vector<ScaleSpec> scales{{valueSide, {}, 24}, {argumentSide, {}, 24}};
    const bool valueLeft = valueSide == Side::Left;
    const bool argumentBottom = argumentSide == Side::Bottom;
    std::vector<PlotComment> comments{
        {title, -1, {0.5, 0.12}, {}},
        {"value", 0, {valueLeft ? -0.6 : 1.6, 0.5}, Angle{-kHalfPi}},
        {"argument", 1, {0.5, argumentBottom ? 1.5 : -0.5}, {}},
    };
    return PlotComposite(area, limits, std::move(scales), std::move(comments), std::move(title));
}

std::unique_ptr<Scene> plots() {
    auto scene = std::make_unique<Scene>("plots", Size{800, 480});
    scene->emplace<PlotComposite>("sine", samplePlot({80, 40, 300, 200}, Side::Left, Side::Bottom, "Sine"));
    scene->emplace<PlotComposite>("decay", samplePlot({480, 60, 240, 180}, Side::Right, Side::Top, "Decay"));
    scene->emplace<FramedControl>("apply", Rect{80, 360, 80, 28}, SizeLimits{{60, 24}, {160, 48}}, "Apply");
    scene->emplace<FramedControl>("reset", Rect{200, 360, 80, 28}, SizeLimits{{60, 24}, {160, 48}}, "Reset");
    return scene;
}

std::unique_ptr<Scene> panels() {
    auto scene = std::make_unique<Scene>("panels", Size{800, 600});
    scene->emplace<FramedControl>("control", Rect{20, 20, 100, 30}, SizeLimits{{60, 30}, {200, 30}}, "Control");
    scene->add("commented", field({120, 80, 120, 24}, "Comment"));
    scene->emplace<Group>("group", Rect{20, 140, 160, 180}, "Group", SizeLimits{{100, 100}, {240, 400}},
                          stackRule(3), std::vector<std::string>{"one", "two", "three"});

    std::vector<std::pair<std::string, std::unique_ptr<Element>>> members;
    members.emplace_back("member1", std::make_unique<FramedControl>(Rect{240, 40, 80, 28},
                                                                    SizeLimits{{40, 20}, {160, 60}}, "A"));
    members.emplace_back("member2", std::make_unique<FramedControl>(Rect{240, 100, 80, 28},
                                                                    SizeLimits{{40, 20}, {160, 60}}, "B"));
    addDependent(*scene, "dependent", 8, "Dependent", std::move(members));

    scene->emplace<LinkedRectangles>("linked", std::vector<Rect>{{380, 30, 60, 40}, {460, 50, 40, 60}, {400, 90, 50, 30}},
                                     std::vector<std::string>{"L1", "L2", "L3"});
    scene->emplace<ChatoyantPolygon>("polygon", ChatoyantPolygon::regular({620, 100}, 60, 5, Angle{-kHalfPi}));
    scene->emplace<NNodeFigure>("disc", Point{300, 260}, std::vector<double>{50}, 24);
    scene->emplace<PlotComposite>("plot", samplePlot({420, 300, 260, 160}, Side::Left, Side::Bottom, "Plot"));
    return scene;
}

std::unique_ptr<Scene> polygon() {
    auto scene = std::make_unique<Scene>("polygon");
    scene->emplace<ChatoyantPolygon>("hexagon", ChatoyantPolygon::regular({200, 160}, 80, 6));
    return scene;
}

std::unique_ptr<Scene> nnode() {
    auto scene = std::make_unique<Scene>("nnode");
    scene->emplace<NNodeFigure>("disc", Point{150, 150}, std::vector<double>{60}, 24);
    scene->emplace<NNodeFigure>("ring", Point{380, 150}, std::vector<double>{40, 80}, 32);
    return scene;
}

struct Entry {
    std::string_view name;
    std::unique_ptr<Scene> (*build)();
};

constexpr std::array<Entry, 7> kCatalog{{
    {"calculator", calculator},
    {"data-selection", dataSelection},
    {"personal-info", personalInfo},
    {"panels", panels},
    {"plots", plots},
    {"polygon", polygon},
    {"nnode", nnode},
}};

} // namespace

const std::vector<std::string>& sceneNames() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Entry& e : kCatalog) {
            out.emplace_back(e.name);
        }
        return out;
    }();
    return names;
}

std::unique_ptr<Scene> makeScene(std::string_view name) {
    for (const Entry& e : kCatalog) {
        if (e.name == name) {
            return e.build();
        }
    }
    throw std::out_of_range("unknown scene '" + std::string(name) + "'");
}

} // namespace movekit
