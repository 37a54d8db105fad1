#include "movekit/trace.hpp"

#include <charconv>
#include <cmath>

#include "movekit/catalog.hpp"
#include "movekit/layout.hpp"
#include "movekit/scene.hpp"

namespace movekit {

TraceError::TraceError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
        }
    }
    return out;
}

class LineParser {
public:
    LineParser(int line, std::string_view text) : line_(line), end_(static_cast<int>(text.size()) + 1) {
        tokens_ = tokenize(text);
    }

    const std::vector<Token>& tokens() const { return tokens_; }

    const Token& at(std::size_t i, const char* expected) const {
        if (i >= tokens_.size()) {
            throw TraceError(line_, end_, std::string("expected ") + expected);
        }
        return tokens_[i];
    }

    double number(std::size_t i, const char* expected) const {
        const Token& t = at(i, expected);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || !std::isfinite(value)) {
            throw TraceError(line_, t.column,
                             std::string("expected ") + expected + ", found '" + std::string(t.text) + "'");
        }
        return value;
    }

    void expectCount(std::size_t n) const {
        if (tokens_.size() > n) {
            throw TraceError(line_, tokens_[n].column, "unexpected '" + std::string(tokens_[n].text) + "'");
        }
    }

    [[noreturn]] void fail(std::size_t i, const std::string& message) const {
        throw TraceError(line_, tokens_.at(i).column, message);
    }

private:
    int line_;
    int end_;
    std::vector<Token> tokens_;
};

bool knownField(std::string_view f) { return f == "x" || f == "y" || f == "w" || f == "h" || f == "angle"; }

} // namespace

std::vector<TraceLine> parseTrace(std::string_view text) {
    std::vector<TraceLine> out;
    int lineNo = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineNo;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const LineParser p(lineNo, line);
        if (p.tokens().empty()) {
            continue;
        }
        const std::string_view verb = p.tokens()[0].text;
        TraceLine parsed;
        parsed.line = lineNo;
        if (verb == "down") {
            TraceDown down;
            down.point = {p.number(1, "x coordinate"), p.number(2, "y coordinate")};
            const Token& b = p.at(3, "button L or R");
            if (b.text == "L") {
                down.button = PointerButton::Left;
            } else if (b.text == "R") {
                down.button = PointerButton::Right;
            } else {
                p.fail(3, "expected button L or R, found '" + std::string(b.text) + "'");
            }
            p.expectCount(4);
            parsed.event = down;
        } else if (verb == "move") {
            parsed.event = TraceMove{{p.number(1, "x coordinate"), p.number(2, "y coordinate")}};
            p.expectCount(3);
        } else if (verb == "up") {
            p.expectCount(1);
            parsed.event = TraceUp{};
        } else if (verb == "assert") {
            TraceAssert a;
            a.path = std::string(p.at(1, "element tag").text);
            a.column = p.tokens()[1].column;
            a.field = std::string(p.at(2, "field name").text);
            if (!knownField(a.field)) {
                p.fail(2, "unknown field '" + a.field + "' (expected x, y, w, h or angle)");
            }
            a.value = p.number(3, "expected value");
            a.tolerance = p.number(4, "tolerance");
            if (a.tolerance < 0) {
                p.fail(4, "tolerance must not be negative");
            }
            p.expectCount(5);
            parsed.event = a;
        } else {
            p.fail(0, "unknown command '" + std::string(verb) + "'");
        }
        out.push_back(std::move(parsed));
    }
    return out;
}

double recordField(const Scene& scene, std::string_view path, std::string_view field) {
    std::size_t slash = path.find('/');
    const std::string tag(path.substr(0, slash));
    LayoutRecord rec = scene.element(tag).saveRecord();
    const LayoutRecord* cur = &rec;
    while (slash != std::string_view::npos) {
        const std::size_t start = slash + 1;
        slash = path.find('/', start);
        const std::string_view childTag = path.substr(start, slash == std::string_view::npos ? slash : slash - start);
        cur = cur->child(childTag);
        if (cur == nullptr) {
            throw std::out_of_range("no record '" + std::string(childTag) + "' under '" + std::string(path) + "'");
        }
    }
    if (field == "x") {
        return cur->x;
    }
    if (field == "y") {
        return cur->y;
    }
    if (field == "w") {
        return cur->w;
    }
    if (field == "h") {
        return cur->h;
    }
    if (field == "angle") {
        return cur->angle;
    }
    throw std::invalid_argument("unknown field '" + std::string(field) + "'");
}

std::size_t ReplayReport::failed() const {
    std::size_t n = 0;
    for (const AssertionResult& a : assertions) {
        n += a.passed ? 0 : 1;
    }
    return n;
}

std::string ReplayReport::format() const {
    std::string out;
    out += "scene " + scene + "\n";
    out += "events " + std::to_string(events) + "\n";
    out += "catches " + std::to_string(catches) + "\n";
    out += "repaints " + std::to_string(repaints) + "\n";
    for (const AssertionResult& a : assertions) {
        out += "assert line " + std::to_string(a.line) + " " + a.path + " " + a.field + " expected " +
               formatReal(a.expected) + " actual " + formatReal(a.actual) + " tol " + formatReal(a.tolerance) +
               (a.passed ? " pass\n" : " FAIL\n");
    }
    out += "assertions " + std::to_string(assertions.size()) + " failed " + std::to_string(failed()) + "\n";
    return out;
}

ReplayReport runTrace(Scene& scene, const std::vector<TraceLine>& trace) {
    ReplayReport report;
    report.scene = scene.id();
    Mover& mover = scene.mover();
    for (const TraceLine& line : trace) {
        if (const auto* down = std::get_if<TraceDown>(&line.event)) {
            ++report.events;
            report.catches += mover.catchAt(down->point, down->button) ? 1 : 0;
        } else if (const auto* move = std::get_if<TraceMove>(&line.event)) {
            ++report.events;
            report.repaints += mover.move(move->point) ? 1 : 0;
        } else if (std::holds_alternative<TraceUp>(line.event)) {
            ++report.events;
            mover.release();
        } else {
            const auto& a = std::get<TraceAssert>(line.event);
            AssertionResult r;
            r.line = line.line;
            r.path = a.path;
            r.field = a.field;
            r.expected = a.value;
            r.tolerance = a.tolerance;
            try {
                r.actual = recordField(scene, a.path, a.field);
            } catch (const std::exception& e) {
                throw TraceError(line.line, a.column, e.what());
            }
            r.passed = std::abs(r.actual - r.expected) <= r.tolerance;
            report.assertions.push_back(std::move(r));
        }
    }
    report.layout = saveLayout(scene);
    return report;
}

ReplayReport runTrace(std::string_view sceneName, const std::vector<TraceLine>& trace) {
    const auto scene = makeScene(sceneName);
    return runTrace(*scene, trace);
}

} // namespace movekit
