#include "movekit/diff.hpp"

#include <algorithm>
#include <vector>

namespace movekit {

namespace {

constexpr std::size_t kContext = 3;

std::vector<std::string_view> splitLines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        out.push_back(text.substr(pos, eol - pos));
        pos = eol + 1;
    }
    return out;
}

struct Op {
    char tag; // ' ', '-', '+'
    std::size_t a;
    std::size_t b;
};

/// Edit script from the longest common subsequence.
std::vector<Op> editScript(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::size_t> lcs((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return lcs[i * (m + 1) + j]; };
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = m; j-- > 0;) {
            at(i, j) = a[i] == b[j] ? at(i + 1, j + 1) + 1 : std::max(at(i + 1, j), at(i, j + 1));
        }
    }
    std::vector<Op> ops;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < n || j < m) {
        if (i < n && j < m && a[i] == b[j]) {
            ops.push_back({' ', i++, j++});
        } else if (i < n && (j == m || at(i + 1, j) >= at(i, j + 1))) {
            ops.push_back({'-', i++, j});
        } else {
            ops.push_back({'+', i, j++});
        }
    }
    return ops;
}

std::string range(std::size_t start, std::size_t count) {
    // Unified diff convention: an empty range names the line before it.
    const std::size_t first = count == 0 ? start : start + 1;
    return std::to_string(first) + "," + std::to_string(count);
}

} // namespace

std::string unifiedDiff(std::string_view expected, std::string_view actual, std::string_view expectedName,
                        std::string_view actualName) {
    const auto a = splitLines(expected);
    const auto b = splitLines(actual);
    const std::vector<Op> ops = editScript(a, b);

    std::string out;
    std::size_t k = 0;
    while (k < ops.size()) {
        while (k < ops.size() && ops[k].tag == ' ') {
            ++k;
        }
        if (k == ops.size()) {
            break;
        }
        std::size_t begin = k >= kContext ? k - kContext : 0;
        std::size_t end = k;
        // Extend while the next change is within two context windows.
        while (end < ops.size()) {
            if (ops[end].tag != ' ') {
                ++end;
                continue;
            }
            std::size_t run = end;
            while (run < ops.size() && ops[run].tag == ' ') {
                ++run;
            }
            if (run == ops.size() || run - end > 2 * kContext) {
                end = std::min(run, end + kContext);
                break;
            }
            end = run;
        }
        std::size_t countA = 0;
        std::size_t countB = 0;
        for (std::size_t t = begin; t < end; ++t) {
            countA += ops[t].tag != '+' ? 1 : 0;
            countB += ops[t].tag != '-' ? 1 : 0;
        }
        if (out.empty()) {
            out += "--- " + std::string(expectedName) + "\n+++ " + std::string(actualName) + "\n";
        }
        out += "@@ -" + range(ops[begin].a, countA) + " +" + range(ops[begin].b, countB) + " @@\n";
        for (std::size_t t = begin; t < end; ++t) {
            out += ops[t].tag;
            out += std::string(ops[t].tag == '+' ? b[ops[t].b] : a[ops[t].a]);
            out += '\n';
        }
        k = end;
    }
    return out;
}

} // namespace movekit
