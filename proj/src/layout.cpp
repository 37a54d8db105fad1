#include "movekit/layout.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include "movekit/scene.hpp"

namespace movekit {

std::string formatReal(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void writeRecord(std::string& out, const LayoutRecord& rec, int depth) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += rec.tag;
    out += ' ';
    out += rec.kind;
    for (double v : {rec.x, rec.y, rec.w, rec.h, rec.angle}) {
        out += ' ';
        out += formatReal(v);
    }
    out += '\n';
    for (const LayoutRecord& child : rec.children) {
        writeRecord(out, child, depth + 1);
    }
}

std::vector<std::string_view> splitSpaces(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

double parseReal(std::string_view token, int line, const char* field) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw LayoutError(line, std::string("field '") + field + "' is not a finite number: '" + std::string(token) +
                                    "'");
    }
    return value;
}

} // namespace

std::string formatLayout(const LayoutDocument& doc) {
    std::string out;
    out += kLayoutMagic;
    out += ' ';
    out += doc.sceneId;
    out += '\n';
    for (const LayoutRecord& rec : doc.records) {
        writeRecord(out, rec, 0);
    }
    return out;
}

LayoutDocument parseLayout(std::string_view text) {
    LayoutDocument doc;
    std::vector<LayoutRecord*> stack; // open records by depth
    bool sawHeader = false;
    int lineNo = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineNo;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }

        if (!sawHeader) {
            const auto tokens = splitSpaces(line);
            if (tokens.empty() || tokens[0].substr(0, 3) != "MRL") {
                throw LayoutError(lineNo, "not a layout document (missing MRL1 header)");
            }
            if (tokens[0] != kLayoutMagic) {
                throw LayoutError(lineNo, "unsupported layout version '" + std::string(tokens[0]) + "'");
            }
            if (tokens.size() != 2) {
                throw LayoutError(lineNo, "header must be 'MRL1 <sceneId>'");
            }
            doc.sceneId = std::string(tokens[1]);
            sawHeader = true;
            continue;
        }
        if (line.find_first_not_of(' ') == std::string_view::npos) {
            continue;
        }
        if (line.find('\t') != std::string_view::npos) {
            throw LayoutError(lineNo, "tab characters are not allowed");
        }

        const std::size_t indent = line.find_first_not_of(' ');
        if (indent % 2 != 0) {
            throw LayoutError(lineNo, "indentation must be a multiple of two spaces");
        }
        const std::size_t depth = indent / 2;
        if (depth > stack.size()) {
            throw LayoutError(lineNo, "child record without a parent");
        }

        const auto tokens = splitSpaces(line.substr(indent));
        if (tokens.size() != 7) {
            throw LayoutError(lineNo, "expected 7 fields '<tag> <kind> <x> <y> <w> <h> <angle>', found " +
                                          std::to_string(tokens.size()));
        }
        LayoutRecord rec;
        rec.tag = std::string(tokens[0]);
        rec.kind = std::string(tokens[1]);
        rec.x = parseReal(tokens[2], lineNo, "x");
        rec.y = parseReal(tokens[3], lineNo, "y");
        rec.w = parseReal(tokens[4], lineNo, "w");
        rec.h = parseReal(tokens[5], lineNo, "h");
        rec.angle = parseReal(tokens[6], lineNo, "angle");

        stack.resize(depth);
        std::vector<LayoutRecord>& siblings = depth == 0 ? doc.records : stack.back()->children;
        for (const LayoutRecord& s : siblings) {
            if (s.tag == rec.tag) {
                throw LayoutError(lineNo, "duplicate tag '" + rec.tag + "'");
            }
        }
        siblings.push_back(std::move(rec));
        stack.push_back(&siblings.back());
    }
    if (!sawHeader) {
        throw LayoutError(1, "empty layout document");
    }
    return doc;
}

LayoutDocument captureLayout(const Scene& scene) {
    LayoutDocument doc;
    doc.sceneId = scene.id();
    for (ElementId id : scene.mover().zOrder()) {
        LayoutRecord rec = scene.mover().element(id).saveRecord();
        rec.tag = scene.tagOf(id);
        doc.records.push_back(std::move(rec));
    }
    return doc;
}

std::string saveLayout(const Scene& scene) { return formatLayout(captureLayout(scene)); }

std::vector<std::string> applyLayout(Scene& scene, const LayoutDocument& doc) {
    if (doc.sceneId != scene.id()) {
        throw LayoutError(1, "layout is for scene '" + doc.sceneId + "', not '" + scene.id() + "'");
    }
    Mover& mover = scene.mover();
    mover.release();

    std::vector<std::string> warnings;
    std::vector<ElementId> listed;
    for (const LayoutRecord& rec : doc.records) {
        const auto id = scene.findId(rec.tag);
        if (!id) {
            warnings.push_back("unknown element tag '" + rec.tag + "' ignored");
            continue;
        }
        Element& element = mover.element(*id);
        if (rec.kind != element.kind()) {
            warnings.push_back("'" + rec.tag + "': kind '" + rec.kind + "' does not match '" +
                               std::string(element.kind()) + "'; record ignored");
            continue;
        }
        element.restoreRecord(rec, warnings);
        listed.push_back(*id);
    }

    // Listed elements take over the z-slots they occupy, in document order;
    // everything else keeps its slot.
    std::vector<ElementId> order = mover.zOrder();
    auto it = listed.begin();
    for (ElementId& slot : order) {
        if (std::find(listed.begin(), listed.end(), slot) != listed.end()) {
            slot = *it++;
        }
    }
    mover.setZOrder(order);
    return warnings;
}

std::vector<std::string> restoreLayout(Scene& scene, std::string_view text) {
    return applyLayout(scene, parseLayout(text));
}

} // namespace movekit
