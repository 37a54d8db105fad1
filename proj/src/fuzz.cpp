#include "movekit/fuzz.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "movekit/catalog.hpp"
#include "movekit/elements/chatoyant_polygon.hpp"
#include "movekit/elements/dependent_frame.hpp"
#include "movekit/elements/linked_rectangles.hpp"
#include "movekit/elements/plot_composite.hpp"
#include "movekit/layout.hpp"
#include "movekit/scene.hpp"

namespace movekit {

namespace {

constexpr double kRigidityTolerance = 1e-6;
constexpr double kExactTolerance = 1e-9;

std::string pointText(Point p) { return "(" + formatReal(p.x) + ", " + formatReal(p.y) + ")"; }

std::string rectText(const Rect& r) {
    return "(" + formatReal(r.x) + ", " + formatReal(r.y) + ", " + formatReal(r.w) + ", " + formatReal(r.h) + ")";
}

bool near(const Rect& a, const Rect& b, double tol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.w - b.w) <= tol &&
           std::abs(a.h - b.h) <= tol;
}

/// Frame of a dependent group from first principles: min/max over the children.
Rect dependentFrameOracle(const DependentFrame& frame) {
    double left = std::numeric_limits<double>::infinity();
    double top = left;
    double right = -left;
    double bottom = -left;
    for (const Element* child : frame.children()) {
        const Rect b = child->bounds();
        left = std::min(left, b.x);
        top = std::min(top, b.y);
        right = std::max(right, b.x + b.w);
        bottom = std::max(bottom, b.y + b.h);
    }
    const double m = frame.margin();
    return {left - m, top - m, right - left + 2 * m, bottom - top + 2 * m};
}

Rect scaleOracle(const Rect& a, const ScaleSpec& s) {
    switch (s.side) {
    case Side::Left: return {a.x - s.thickness + s.offset.x, a.y + s.offset.y, s.thickness, a.h};
    case Side::Right: return {a.x + a.w + s.offset.x, a.y + s.offset.y, s.thickness, a.h};
    case Side::Top: return {a.x + s.offset.x, a.y - s.thickness + s.offset.y, a.w, s.thickness};
    case Side::Bottom: return {a.x + s.offset.x, a.y + a.h + s.offset.y, a.w, s.thickness};
    }
    return a;
}

/// Recomputes every scale and comment from the parent-relative state and compares it,
/// exactly, with what the composite reports and paints.
void auditPlot(const PlotComposite& plot, const std::string& tag, std::vector<std::string>& out) {
    std::vector<Rect> scales;
    for (const ScaleSpec& s : plot.scales()) {
        scales.push_back(scaleOracle(plot.area(), s));
    }
    std::vector<Point> comments;
    for (const PlotComment& c : plot.comments()) {
        const Rect owner = c.owner < 0 ? plot.area() : scales.at(static_cast<std::size_t>(c.owner));
        comments.push_back({owner.x + c.anchor.x * owner.w, owner.y + c.anchor.y * owner.h});
    }

    RenderModel model;
    plot.render(model);
    std::vector<Rect> paintedScales;
    std::vector<Point> paintedComments;
    for (const DrawCommand& cmd : model.commands) {
        if (const auto* r = std::get_if<FilledRect>(&cmd); r && r->style == "scale") {
            paintedScales.push_back(r->rect);
        } else if (const auto* t = std::get_if<TextCommand>(&cmd); t && t->style == "comment") {
            paintedComments.push_back(t->position);
        }
    }
    if (paintedScales.size() != scales.size() || paintedComments.size() != comments.size()) {
        out.push_back(tag + ": painted children do not match the composite's parts");
        return;
    }
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (plot.scaleRect(i) != scales[i] || paintedScales[i] != scales[i]) {
            out.push_back(tag + ": scale " + std::to_string(i) + " at " + rectText(plot.scaleRect(i)) +
                          ", recomputed " + rectText(scales[i]));
        }
    }
    for (std::size_t i = 0; i < comments.size(); ++i) {
        if (plot.commentCenter(i) != comments[i] || paintedComments[i] != comments[i]) {
            out.push_back(tag + ": comment " + std::to_string(i) + " at " + pointText(plot.commentCenter(i)) +
                          ", recomputed " + pointText(comments[i]));
        }
    }
}

std::vector<Point> linkedOffsets(const LinkedRectangles& linked) {
    std::vector<Point> out;
    const Point origin{linked.rects().front().x, linked.rects().front().y};
    for (const Rect& r : linked.rects()) {
        out.push_back(Point{r.x, r.y} - origin);
    }
    return out;
}

} // namespace

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string FuzzReport::format() const {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, layoutHash);
    std::string out;
    out += "scene " + scene + "\n";
    out += "seed " + std::to_string(seed) + "\n";
    out += "steps " + std::to_string(steps) + "\n";
    out += "gestures " + std::to_string(gestures) + "\n";
    out += "catches " + std::to_string(catches) + "\n";
    out += "repaints " + std::to_string(repaints) + "\n";
    out += "violations " + std::to_string(violationCount) + "\n";
    for (const std::string& v : violations) {
        out += "  " + v + "\n";
    }
    out += "layout-fnv1a " + std::string(hash) + "\n";
    return out;
}

Fuzzer::Fuzzer(Scene& scene, std::uint64_t seed) : scene_(scene), rng_(seed) {
    report_.scene = scene.id();
    report_.seed = seed;
    for (const std::string& tag : scene.tags()) {
        if (const auto* linked = dynamic_cast<const LinkedRectangles*>(&scene.element(tag))) {
            linkedOffsets_[tag] = linkedOffsets(*linked);
        }
    }
}

double Fuzzer::real() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

std::uint64_t Fuzzer::below(std::uint64_t n) { return rng_() % n; }

Point Fuzzer::samplePoint() {
    const std::vector<ElementId> order = scene_.mover().zOrder();
    if (order.empty() || real() >= 0.75) {
        const double x = real() * scene_.extent().w;
        const double y = real() * scene_.extent().h;
        return {x, y};
    }
    const ElementId id = order[below(order.size())];
    const Cover cover = scene_.mover().cover(id);
    const CoverNode& node = cover.node(below(cover.size()));
    return std::visit(
        [this](const auto& shape) -> Point {
            using S = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<S, Circle>) {
                const double a = 2 * std::numbers::pi * real();
                const double r = shape.radius * std::sqrt(real());
                return {shape.center.x + r * std::cos(a), shape.center.y + r * std::sin(a)};
            } else if constexpr (std::is_same_v<S, Capsule>) {
                const double t = real();
                const double across = (2 * real() - 1) * shape.halfWidth;
                const Point along = shape.p1 + (shape.p2 - shape.p1) * t;
                const double len = distance(shape.p1, shape.p2);
                if (len == 0.0) {
                    return {along.x + across, along.y};
                }
                const Point normal{-(shape.p2.y - shape.p1.y) / len, (shape.p2.x - shape.p1.x) / len};
                return along + normal * across;
            } else {
                std::vector<double> weights;
                double sum = 0.0;
                for (std::size_t i = 0; i < shape.vertices.size(); ++i) {
                    weights.push_back(real() + 1e-3);
                    sum += weights.back();
                }
                Point p;
                for (std::size_t i = 0; i < shape.vertices.size(); ++i) {
                    p += shape.vertices[i] * (weights[i] / sum);
                }
                return p;
            }
        },
        node.shape());
}

void Fuzzer::violation(const std::string& message) {
    ++report_.violationCount;
    if (report_.violations.size() < kMaxReportedViolations) {
        report_.violations.push_back("step " + std::to_string(report_.steps) + ": " + message);
    }
}

void Fuzzer::press() {
    const std::string before = saveLayout(scene_);
    const PointerButton button = real() < 0.25 ? PointerButton::Right : PointerButton::Left;
    pointer_ = samplePoint();
    ++report_.gestures;
    polygonAtCatch_.reset();
    if (scene_.mover().catchAt(pointer_, button)) {
        ++report_.catches;
        const auto& caught = std::get<Caught>(scene_.mover().state());
        if (const auto* poly = dynamic_cast<const ChatoyantPolygon*>(&scene_.mover().element(caught.element))) {
            polygonAtCatch_ = PolygonSnapshot{poly->center(), poly->vertices()};
        }
    }
    movesLeft_ = 1 + below(6);
    inGesture_ = true;
    audit(before, false, false);
}

void Fuzzer::drag() {
    const std::string before = saveLayout(scene_);
    const double dx = -25 + 50 * real();
    const double dy = -25 + 50 * real();
    pointer_ += Point{dx, dy};
    const bool changed = scene_.mover().move(pointer_);
    report_.repaints += changed ? 1 : 0;
    --movesLeft_;
    audit(before, changed, true);
}

void Fuzzer::lift() {
    const std::string before = saveLayout(scene_);
    scene_.mover().release();
    polygonAtCatch_.reset();
    inGesture_ = false;
    audit(before, false, false);
}

void Fuzzer::step() {
    ++report_.steps;
    if (!inGesture_) {
        press();
    } else if (movesLeft_ > 0) {
        drag();
    } else {
        lift();
    }
}

void Fuzzer::run(std::size_t steps) {
    for (std::size_t i = 0; i < steps; ++i) {
        step();
    }
}

FuzzReport Fuzzer::finish() {
    report_.layout = saveLayout(scene_);
    report_.layoutHash = fnv1a(report_.layout);
    return report_;
}

std::vector<std::string> Fuzzer::auditScene(const Scene& scene) {
    std::vector<std::string> out = scene.checkInvariants();
    for (const std::string& tag : scene.tags()) {
        const Element& element = scene.element(tag);
        if (const auto* frame = dynamic_cast<const DependentFrame*>(&element)) {
            const Rect expected = dependentFrameOracle(*frame);
            if (!near(frame->frame(), expected, kExactTolerance)) {
                out.push_back(tag + ": frame " + rectText(frame->frame()) + " is not union + margin " +
                              rectText(expected));
            }
        } else if (const auto* plot = dynamic_cast<const PlotComposite*>(&element)) {
            auditPlot(*plot, tag, out);
        }
    }
    return out;
}

void Fuzzer::audit(const std::string& before, bool changed, bool isMove) {
    const std::string after = saveLayout(scene_);
    const bool differs = before != after;
    if (isMove && changed != differs) {
        violation(std::string("move returned ") + (changed ? "true" : "false") + " but geometry " +
                  (differs ? "changed" : "did not change"));
    }
    if (!isMove && differs) {
        violation("press or release changed geometry");
    }
    for (const std::string& v : auditScene(scene_)) {
        violation(v);
    }
    auditDrag();
}

void Fuzzer::auditDrag() {
    for (const auto& [tag, offsets] : linkedOffsets_) {
        const auto& linked = dynamic_cast<const LinkedRectangles&>(scene_.element(tag));
        const std::vector<Point> now = linkedOffsets(linked);
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            if (distance(now[i], offsets[i]) > kExactTolerance) {
                violation(tag + ": offset of rect " + std::to_string(i) + " drifted to " + pointText(now[i]));
            }
        }
    }

    const auto* caught = std::get_if<Caught>(&scene_.mover().state());
    if (caught == nullptr || !polygonAtCatch_) {
        return;
    }
    const auto& poly = dynamic_cast<const ChatoyantPolygon&>(scene_.mover().element(caught->element));
    const std::string& tag = scene_.tagOf(caught->element);
    const PolygonSnapshot& start = *polygonAtCatch_;
    const std::vector<Point>& v = poly.vertices();
    const std::size_t n = v.size();

    if (caught->mode == DragMode::Rotate) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d0 = distance(start.vertices[i], start.vertices[j]);
                const double d1 = distance(v[i], v[j]);
                if (std::abs(d1 - d0) > kRigidityTolerance) {
                    violation(tag + ": rotation changed the distance between vertices " + std::to_string(i) +
                              " and " + std::to_string(j));
                }
            }
            const double r0 = distance(start.vertices[i], start.center);
            const double r1 = distance(v[i], poly.center());
            if (std::abs(r1 - r0) > kExactTolerance) {
                violation(tag + ": rotation changed the center distance of vertex " + std::to_string(i));
            }
        }
        return;
    }

    const bool zoom = caught->node > poly.centerNode() && caught->node < poly.bodyNode();
    if (!zoom) {
        return;
    }
    const Point c = start.center;
    const double factor = distance(v[0], c) / distance(start.vertices[0], c);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = start.vertices[i] - c;
        const Point b = v[i] - c;
        const double f = b.length() / a.length();
        if (std::abs(f - factor) > kExactTolerance * std::max(1.0, factor)) {
            violation(tag + ": zoom scaled vertex " + std::to_string(i) + " by " + formatReal(f) + ", not " +
                      formatReal(factor));
        }
        const double turn = std::abs(std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y));
        if (turn > kExactTolerance) {
            violation(tag + ": zoom turned vertex " + std::to_string(i) + " by " + formatReal(turn));
        }
    }
}

FuzzReport fuzzScene(const std::string& sceneName, std::size_t steps, std::uint64_t seed) {
    const auto scene = makeScene(sceneName);
    Fuzzer fuzzer(*scene, seed);
    fuzzer.run(steps);
    return fuzzer.finish();
}

} // namespace movekit
