#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "movekit/mover.hpp"

namespace movekit {

class Scene;

struct FuzzReport {
    std::string scene;
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    std::size_t gestures = 0;
    std::size_t catches = 0;
    std::size_t repaints = 0;
    std::size_t violationCount = 0;
    /// The first few violations, each prefixed with its step number.
    std::vector<std::string> violations;
    /// FNV-1a (64-bit) of the final layout document.
    std::uint64_t layoutHash = 0;
    std::string layout;

    bool ok() const { return violationCount == 0; }
    std::string format() const;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

/// Seeded random pointer gestures over a scene, auditing every invariant after each event.
///
/// Generator: std::mt19937_64 seeded with the seed. A real in [0,1) is (next >> 11) * 2^-53;
/// an integer below n is next % n. A gesture is one press, 1 to 6 moves by deltas in
/// [-25, 25) per axis, and one release; each of these events is one step. The press
/// uses the right button with probability 1/4, and lands inside a random cover node of a
/// random element with probability 3/4, otherwise anywhere in the scene extent.
class Fuzzer {
public:
    static constexpr std::size_t kMaxReportedViolations = 20;

    Fuzzer(Scene& scene, std::uint64_t seed);

    /// Runs one event and its audit.
    void step();
    void run(std::size_t steps);

    const FuzzReport& report() const { return report_; }
    /// The report with the final layout and hash filled in.
    FuzzReport finish();

    /// Every invariant violation in the scene at this moment, independent of history.
    static std::vector<std::string> auditScene(const Scene& scene);

private:
    struct PolygonSnapshot {
        Point center;
        std::vector<Point> vertices;
    };

    double real();
    std::uint64_t below(std::uint64_t n);
    Point samplePoint();
    void press();
    void drag();
    void lift();
    void audit(const std::string& before, bool changed, bool isMove);
    void auditDrag();
    void violation(const std::string& message);

    Scene& scene_;
    std::mt19937_64 rng_;
    FuzzReport report_;
    std::size_t movesLeft_ = 0;
    Point pointer_;
    bool inGesture_ = false;
    std::map<std::string, std::vector<Point>> linkedOffsets_;
    std::optional<PolygonSnapshot> polygonAtCatch_; // when a polygon is caught
};

/// Builds the named catalog scene and fuzzes it.
FuzzReport fuzzScene(const std::string& sceneName, std::size_t steps, std::uint64_t seed);

} // namespace movekit
