// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "movekit/catalog.hpp"
#include "movekit/cover.hpp"
#include "movekit/elements/chatoyant_polygon.hpp"
#include "movekit/elements/framed_control.hpp"
#include "movekit/fuzz.hpp"
#include "movekit/layout.hpp"
#include "movekit/scene.hpp"
#include "movekit/trace.hpp"
#include "oracles.hpp"

using namespace movekit;

namespace {

constexpr double kBoundaryBand = 1e-9;
constexpr double kRigidTol = 1e-6;
constexpr double kZoomTol = 1e-9;
constexpr double kContainmentSeconds = 5.0;
constexpr double kFrameHoleSeconds = 10.0;
constexpr double kSuiteSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.2fs)", secondsSince(start));
    std::printf("%s %s: %s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), timing);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CorpusEntry {
    std::string scene;
    std::string trace;
    std::string golden;
};

std::vector<CorpusEntry> corpus() {
    std::istringstream in(readFile(std::string(MOVEKIT_GOLDEN_DIR) + "/corpus.txt"));
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        CorpusEntry e;
        fields >> e.scene >> e.trace >> e.golden;
        out.push_back(e);
    }
    return out;
}

std::string golden(const std::string& file) { return std::string(MOVEKIT_GOLDEN_DIR) + "/" + file; }

// Runs the CLI and returns its exit status and stdout.
std::pair<int, std::string> runCli(const std::string& args) {
    const std::string command = std::string(MOVEKIT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("cannot start " + command);
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Containment of circles, capsules and convex polygons against brute-force oracles.
Outcome containment() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(-120, 120);
    std::uniform_real_distribution<double> r(1, 60);
    constexpr int kShapesPerKind = 10;
    constexpr int kPoints = 10000;
    long disagreements = 0;
    long checked = 0;
    const auto start = Clock::now();
    for (int s = 0; s < kShapesPerKind; ++s) {
        const Circle circle{{u(rng) / 4, u(rng) / 4}, r(rng)};
        const Capsule capsule{{u(rng) / 2, u(rng) / 2}, {u(rng) / 2, u(rng) / 2}, r(rng) / 3};
        const ConvexPolygon polygon{oracle::randomConvexPolygon(rng, {0, 0}, r(rng) + 20)};
        for (int i = 0; i < kPoints; ++i) {
            const Point p{u(rng), u(rng)};
            const double dc = distance(p, circle.center) - circle.radius;
            if (std::abs(dc) > kBoundaryBand) {
                disagreements += shapeContains(circle, p) != (dc < 0) ? 1 : 0;
                ++checked;
            }
            const double dk = oracle::distToSegment(p, capsule.p1, capsule.p2) - capsule.halfWidth;
            if (std::abs(dk) > kBoundaryBand) {
                disagreements += shapeContains(capsule, p) != (dk < 0) ? 1 : 0;
                ++checked;
            }
            if (oracle::distToPolygonBoundary(p, polygon.vertices) > kBoundaryBand) {
                disagreements += shapeContains(polygon, p) != (oracle::windingNumber(p, polygon.vertices) != 0) ? 1 : 0;
                ++checked;
            }
        }
    }
    const double seconds = secondsSince(start);
    return {disagreements == 0 && seconds < kContainmentSeconds,
            fmt("%ld disagreements in %ld samples over %d shapes x %d points each, %.2fs < %.0fs", disagreements,
                checked, 3 * kShapesPerKind, kPoints, seconds, kContainmentSeconds)};
}

// Interior of framed controls never catches; every frame-band point does.
Outcome frameHole() {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(0, 1);
    constexpr int kRects = 100;
    constexpr int kInterior = 10000;
    constexpr int kBand = 2000;
    long interiorCaught = 0;
    long bandMissed = 0;
    const auto start = Clock::now();
    for (int k = 0; k < kRects; ++k) {
        const Rect rect{400 * u(rng), 300 * u(rng), 20 + 200 * u(rng), 20 + 150 * u(rng)};
        const Size s = rect.size();
        const int policy = k % 4;
        const SizeLimits limits{{policy & 1 ? s.w / 2 : s.w, policy & 2 ? s.h / 2 : s.h},
                                {policy & 1 ? s.w * 2 : s.w, policy & 2 ? s.h * 2 : s.h}};
        FramedControl control(rect, limits);
        Mover mover;
        mover.add(control);
        const double fw = mover.frameWidth();
        for (int i = 0; i < kInterior; ++i) {
            const Point p{rect.x + kBoundaryBand + (rect.w - 2 * kBoundaryBand) * u(rng),
                          rect.y + kBoundaryBand + (rect.h - 2 * kBoundaryBand) * u(rng)};
            if (mover.catchAt(p, PointerButton::Left)) {
                ++interiorCaught;
                mover.release();
            }
        }
        const Rect outer = rect.expanded(fw);
        int bandSamples = 0;
        while (bandSamples < kBand) {
            const Point p{outer.x + outer.w * u(rng), outer.y + outer.h * u(rng)};
            if (!oracle::inFrameBand(p, rect, fw)) {
                continue;
            }
            ++bandSamples;
            if (mover.catchAt(p, PointerButton::Left)) {
                mover.release();
            } else {
                ++bandMissed;
            }
        }
    }
    const double seconds = secondsSince(start);
    return {interiorCaught == 0 && bandMissed == 0 && seconds < kFrameHoleSeconds,
            fmt("%d rects: %ld of %d interior samples caught, %ld of %d band samples missed, %.2fs < %.0fs", kRects,
                interiorCaught, kRects * kInterior, bandMissed, kRects * kBand, seconds, kFrameHoleSeconds)};
}

// Calculator buttons follow strip drags exactly, ignore interior presses, and clamp resizes.
Outcome calculatorParity() {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<int> quarter(-400, 400);
    int moveErrors = 0;
    int interiorCatches = 0;
    int clampErrors = 0;
    int drags = 0;
    int resizes = 0;
    const auto names = makeScene("calculator")->tags();
    for (const std::string& tag : names) {
        auto scene = makeScene("calculator");
        Mover& mover = scene->mover();
        auto& button = dynamic_cast<FramedControl&>(scene->element(tag));
        mover.bringToFront(scene->idOf(tag));
        const std::string before = saveLayout(*scene);

        for (int i = 0; i < 100; ++i) {
            const Rect r = button.rect();
            const Point p{r.x + r.w * (0.05 + 0.9 * (i % 10) / 9.0), r.y + r.h * (0.05 + 0.9 * (i / 10) / 9.0)};
            if (mover.catchAt(p, PointerButton::Left)) {
                ++interiorCatches;
                mover.release();
            }
        }
        interiorCatches += saveLayout(*scene) == before ? 0 : 1;

        for (int i = 0; i < 5; ++i) {
            const Rect r = button.rect();
            const Point delta{quarter(rng) / 4.0, quarter(rng) / 4.0};
            const Point grab{r.x + 4, r.y - 3};
            mover.catchAt(grab, PointerButton::Left);
            mover.move(grab + delta * 0.5);
            mover.move(grab + delta);
            mover.release();
            ++drags;
            moveErrors += button.rect() == r.translated(delta.x, delta.y) ? 0 : 1;
        }

        const SizeLimits lim = button.limits();
        const ResizePolicy policy = button.policy();
        const bool we = policy == ResizePolicy::WEOnly || policy == ResizePolicy::Full;
        const bool ns = policy == ResizePolicy::NSOnly || policy == ResizePolicy::Full;
        for (int i = 0; i < 6 && (we || ns); ++i) {
            const Rect r = button.rect();
            const double d = quarter(rng) / 2.0;
            Point grab;
            Rect expected = r;
            const int choice = i % 3;
            if (we && (choice == 0 || !ns)) {
                // right-mid: the left edge stays
                grab = {r.right() + 3, r.y + r.h / 2};
                expected.w = std::clamp(r.w + d, lim.min.w, lim.max.w);
                mover.catchAt(grab, PointerButton::Left);
                mover.move(grab + Point{d, 0});
            } else if (ns && (choice == 1 || !we)) {
                // bottom-mid: the top edge stays
                grab = {r.x + r.w / 2, r.bottom() + 3};
                expected.h = std::clamp(r.h + d, lim.min.h, lim.max.h);
                mover.catchAt(grab, PointerButton::Left);
                mover.move(grab + Point{0, d});
            } else {
                // top-left corner: the bottom-right corner stays
                grab = {r.x - 3, r.y - 3};
                expected.w = std::clamp(r.w - d, lim.min.w, lim.max.w);
                expected.h = std::clamp(r.h - d, lim.min.h, lim.max.h);
                expected.x = r.right() - expected.w;
                expected.y = r.bottom() - expected.h;
                mover.catchAt(grab, PointerButton::Left);
                mover.move(grab + Point{d, d});
            }
            mover.release();
            ++resizes;
            clampErrors += button.rect() == expected && lim.admits(button.rect().size()) ? 0 : 1;
        }
    }
    const ReplayReport replay =
        runTrace("calculator", parseTrace(readFile(golden("calculator_rearrange.trace"))));
    const bool goldenMatch = replay.passed() && replay.layout == readFile(golden("calculator_rearrange.mrl"));
    return {moveErrors == 0 && interiorCatches == 0 && clampErrors == 0 && goldenMatch,
            fmt("%zu buttons: %d/%d drags off by a nonzero amount, %d interior catches, %d/%d resizes off the clamp "
                "oracle, rearrangement trace %s",
                names.size(), moveErrors, drags, interiorCatches, clampErrors, resizes,
                goldenMatch ? "matches its golden layout" : "DOES NOT match its golden layout")};
}

// Polygon rotation is rigid and edge zoom is uniform about the center.
Outcome rigidityAndZoom() {
    auto scene = makeScene("polygon");
    auto& polygon = dynamic_cast<ChatoyantPolygon&>(scene->element("hexagon"));
    Mover& mover = scene->mover();
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(-1, 1);
    double worstRigid = 0.0;
    double worstZoom = 0.0;
    int steps = 0;
    int rotateEvents = 0;
    int zoomEvents = 0;
    while (steps < 500) {
        const std::vector<Point> start = polygon.vertices();
        const Point c = polygon.center();
        const bool rotate = (steps / 6) % 2 == 0;
        const std::size_t edge = static_cast<std::size_t>(steps) % start.size();
        const Point grab = rotate ? start[edge] : (start[edge] + start[(edge + 1) % start.size()]) * 0.5;
        const std::size_t node = rotate ? edge : polygon.edgeNode(edge);
        if (!mover.catchAt(grab, rotate ? PointerButton::Right : PointerButton::Left) ||
            std::get<Caught>(mover.state()).node != node) {
            return {false, fmt("step %d: node %zu not caught", steps, node)};
        }
        ++steps;
        // Zoom factors keep the circumradius near 80.
        const double base = 80.0 / polygon.circumradius();
        for (int k = 0; k < 5; ++k, ++steps) {
            const Point target = rotate ? c + Point{u(rng), u(rng)} * 150
                                        : c + (grab - c) * (base * (1 + 0.4 * u(rng))) + Point{u(rng), u(rng)} * 3;
            mover.move(target);
            const std::vector<Point>& v = polygon.vertices();
            if (rotate) {
                ++rotateEvents;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    for (std::size_t j = i + 1; j < v.size(); ++j) {
                        worstRigid = std::max(worstRigid, std::abs(distance(v[i], v[j]) - distance(start[i], start[j])));
                    }
                }
            } else {
                ++zoomEvents;
                double lo = 1e300;
                double hi = -1e300;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    const double f = distance(v[i], c) / distance(start[i], c);
                    lo = std::min(lo, f);
                    hi = std::max(hi, f);
                }
                worstZoom = std::max(worstZoom, hi - lo);
            }
        }
        mover.release();
        ++steps;
    }
    const FuzzReport fuzz = fuzzScene("polygon", 500, 404);
    return {worstRigid <= kRigidTol && worstZoom <= kZoomTol && fuzz.ok(),
            fmt("%d rotate events, max pairwise distance change %.3g <= %g; %d zoom events, max factor spread %.3g <= "
                "%g; 500-step fuzz %zu violations",
                rotateEvents, worstRigid, kRigidTol, zoomEvents, worstZoom, kZoomTol, fuzz.violationCount)};
}

// Plot children recompute exactly from parent-relative state; dependent frames equal union + margin.
Outcome parentChild() {
    std::string detail;
    bool pass = true;
    for (const char* name : {"plots", "personal-info", "panels"}) {
        for (std::uint64_t seed : {1u, 2u}) {
            const FuzzReport r = fuzzScene(name, 10000, seed);
            pass = pass && r.ok();
            detail += fmt("%s seed %llu: %zu violations; ", name, static_cast<unsigned long long>(seed),
                          r.violationCount);
        }
    }
    detail += "each audited after every one of 10000 events";
    return {pass, detail};
}

// Layout save/restore/save is byte-identical; the golden corpus replays cleanly.
Outcome persistence() {
    int scenes = 0;
    int differences = 0;
    for (std::uint64_t seed = 1; scenes < 100; ++seed) {
        for (const std::string& name : sceneNames()) {
            auto scene = makeScene(name);
            Fuzzer fuzzer(*scene, seed * 7919);
            fuzzer.run(300);
            const std::string saved = saveLayout(*scene);
            auto fresh = makeScene(name);
            restoreLayout(*fresh, saved);
            differences += saveLayout(*fresh) == saved && fresh->checkInvariants().empty() ? 0 : 1;
            ++scenes;
        }
    }
    int goldenFailures = 0;
    const auto entries = corpus();
    for (const CorpusEntry& e : entries) {
        const auto [code, out] = runCli("replay --scene " + e.scene + " --trace " + golden(e.trace) + " --golden " +
                                        golden(e.golden));
        goldenFailures += code == 0 ? 0 : 1;
    }
    return {differences == 0 && goldenFailures == 0 && !entries.empty(),
            fmt("%d fuzzed scenes, %d not byte-identical after save-restore-save; replay --golden nonzero on %d of "
                "%zu corpus traces",
                scenes, differences, goldenFailures, entries.size())};
}

// Same seed, same report, both in-process and through the CLI.
Outcome determinism(Clock::time_point suiteStart) {
    int differing = 0;
    for (const std::string& name : sceneNames()) {
        differing += fuzzScene(name, 2000, 7).format() == fuzzScene(name, 2000, 7).format() ? 0 : 1;
    }
    const auto a = runCli("fuzz --scene panels --steps 3000 --seed 7");
    const auto b = runCli("fuzz --scene panels --steps 3000 --seed 7");
    const bool cliSame = a.first == 0 && a == b;
    const double seconds = secondsSince(suiteStart);
    return {differing == 0 && cliSame && seconds < kSuiteSeconds,
            fmt("%d of %zu scenes differ between two in-process runs; CLI fuzz --seed 7 reports %s; acceptance "
                "suite %.2fs < %.0fs",
                differing, sceneNames().size(), cliSame ? "byte-identical" : "DIFFERENT", seconds, kSuiteSeconds)};
}

} // namespace

int main() {
    const auto suiteStart = Clock::now();
    report("containment-oracle", containment);
    report("control-frame-hole", frameHole);
    report("calculator-parity", calculatorParity);
    report("rigidity-and-zoom", rigidityAndZoom);
    report("parent-child-audit", parentChild);
    report("persistence", persistence);
    report("determinism", [&] { return determinism(suiteStart); });
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
