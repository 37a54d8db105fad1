#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "movekit/boundary.hpp"
#include "movekit/catalog.hpp"
#include "movekit/diff.hpp"
#include "movekit/fuzz.hpp"
#include "movekit/layout.hpp"
#include "movekit/trace.hpp"

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitGolden = 2;
constexpr int kExitUsage = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        throw UsageError("cannot write '" + path + "'");
    }
}

struct ReplayArgs {
    std::string scene;
    std::string trace;
    std::string saveLayout;
    std::string golden;
};

int replay(const ReplayArgs& args) {
    const auto trace = movekit::parseTrace(readFile(args.trace));
    const movekit::ReplayReport report = movekit::runTrace(args.scene, trace);
    std::cout << report.format();
    if (!args.saveLayout.empty()) {
        writeFile(args.saveLayout, report.layout);
    }
    bool goldenOk = true;
    if (!args.golden.empty()) {
        const std::string golden = readFile(args.golden);
        goldenOk = golden == report.layout;
        if (!goldenOk) {
            std::cout << movekit::unifiedDiff(golden, report.layout, args.golden, "actual");
        }
        std::cout << "golden " << (goldenOk ? "match" : "MISMATCH") << "\n";
    }
    if (!report.passed()) {
        return kExitAssertion;
    }
    return goldenOk ? 0 : kExitGolden;
}

int boundary() {
    movekit::BoundarySession session;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::cout << session.handleLine(line) << "\n" << std::flush;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"movekit: replay, fuzz and serve direct-manipulation scenes"};
    app.require_subcommand(1);

    app.add_subcommand("scenes", "List the built-in scenes");

    ReplayArgs replayArgs;
    CLI::App* replayCmd = app.add_subcommand("replay", "Replay a pointer trace against a scene");
    replayCmd->add_option("--scene", replayArgs.scene, "Scene name")->required();
    replayCmd->add_option("--trace", replayArgs.trace, "Trace file")->required();
    replayCmd->add_option("--save-layout", replayArgs.saveLayout, "Write the final layout here");
    replayCmd->add_option("--golden", replayArgs.golden, "Compare the final layout with this file");

    std::string fuzzSceneName;
    std::size_t steps = 1000;
    std::uint64_t seed = 1;
    CLI::App* fuzzCmd = app.add_subcommand("fuzz", "Random gestures with invariant audits after every event");
    fuzzCmd->add_option("--scene", fuzzSceneName, "Scene name")->required();
    fuzzCmd->add_option("--steps", steps, "Number of pointer events");
    fuzzCmd->add_option("--seed", seed, "Generator seed");

    app.add_subcommand("boundary", "Serve JSON requests, one per line, on stdin/stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand("scenes")) {
            for (const std::string& name : movekit::sceneNames()) {
                std::cout << name << "\n";
            }
            return 0;
        }
        if (replayCmd->parsed()) {
            return replay(replayArgs);
        }
        if (fuzzCmd->parsed()) {
            const movekit::FuzzReport report = movekit::fuzzScene(fuzzSceneName, steps, seed);
            std::cout << report.format();
            return report.ok() ? 0 : kExitAssertion;
        }
        return boundary();
    } catch (const movekit::TraceError& e) {
        std::cerr << "trace: " << e.what() << "\n";
    } catch (const movekit::LayoutError& e) {
        std::cerr << "layout: " << e.what() << "\n";
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
    }
    return kExitUsage;
}
