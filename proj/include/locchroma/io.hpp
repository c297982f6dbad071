#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "locchroma/coloring.hpp"
#include "locchroma/tree.hpp"

namespace locchroma {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
};

/// Line-oriented reader that keeps a running line number so that errors in
/// concatenated streams (tree followed by coloring) point at the right line.
class LineReader {
public:
    explicit LineReader(std::istream& in, std::string source = "<input>")
        : in_(in), source_(std::move(source)) {}

    bool next(std::string& line) {
        if (pending_) {
            line = std::move(*pending_);
            pending_.reset();
            return true;
        }
        if (!std::getline(in_, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_;
        return true;
    }

    bool next_nonempty(std::string& line) {
        while (next(line))
            if (!line.empty()) return true;
        return false;
    }

    /// Look ahead for further non-blank content without consuming it.
    bool has_more_content() {
        if (pending_) return true;
        std::string line;
        while (std::getline(in_, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            ++line_;
            if (!line.empty()) {
                pending_ = std::move(line);
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(source_, line_, what);
    }

    int line() const { return line_; }
    const std::string& source() const { return source_; }

private:
    std::istream& in_;
    std::string source_;
    std::optional<std::string> pending_;
    int line_ = 0;
};

namespace io_detail {

inline std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) words.push_back(w);
    return words;
}

inline long long parse_int(const LineReader& reader, const std::string& word) {
    size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(word, &used);
    } catch (const std::exception&) {
        reader.fail("expected an integer, got '" + word + "'");
    }
    if (used != word.size()) reader.fail("expected an integer, got '" + word + "'");
    return value;
}

}  // namespace io_detail

/// Tree file: `tree <n>` then n-1 lines `<u> <v>` with u < v, in sorted
/// order. Reads exactly one tree block and leaves the rest of the stream
/// untouched.
inline Tree parse_tree(LineReader& reader) {
    std::string line;
    if (!reader.next_nonempty(line)) reader.fail("expected a 'tree <n>' header");
    auto words = io_detail::split_words(line);
    if (words.size() != 2 || words[0] != "tree")
        reader.fail("expected a 'tree <n>' header, got '" + line + "'");
    long long n = io_detail::parse_int(reader, words[1]);
    if (n < 1) reader.fail("vertex count must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < n - 1; ++i) {
        if (!reader.next(line)) reader.fail("expected " + std::to_string(n - 1) +
                                            " edge lines, got " + std::to_string(i));
        auto ew = io_detail::split_words(line);
        if (ew.size() != 2) reader.fail("expected '<u> <v>', got '" + line + "'");
        long long u = io_detail::parse_int(reader, ew[0]);
        long long v = io_detail::parse_int(reader, ew[1]);
        if (u < 0 || u >= n || v < 0 || v >= n)
            reader.fail("edge endpoint out of range 0.." + std::to_string(n - 1));
        if (u >= v) reader.fail("edges must satisfy u < v");
        std::pair<int, int> edge{static_cast<int>(u), static_cast<int>(v)};
        if (!edges.empty() && !(edges.back() < edge))
            reader.fail("edges must be sorted");
        edges.push_back(edge);
    }
    try {
        return Tree(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        reader.fail(e.what());
    }
}

inline Tree parse_tree(std::istream& in, const std::string& source = "<input>") {
    LineReader reader(in, source);
    return parse_tree(reader);
}

inline std::string format_tree(const Tree& t) {
    std::ostringstream out;
    out << "tree " << t.size() << "\n";
    for (const auto& [u, v] : t.edges()) out << u << " " << v << "\n";
    return out.str();
}

/// Coloring file: `coloring <n> <k>` then n lines `<vertex> <color>`
/// sorted by vertex, colors filling 1..k with no gaps.
inline Coloring parse_coloring(LineReader& reader) {
    std::string line;
    if (!reader.next_nonempty(line))
        reader.fail("expected a 'coloring <n> <k>' header");
    auto words = io_detail::split_words(line);
    if (words.size() != 3 || words[0] != "coloring")
        reader.fail("expected a 'coloring <n> <k>' header, got '" + line + "'");
    long long n = io_detail::parse_int(reader, words[1]);
    long long k = io_detail::parse_int(reader, words[2]);
    if (n < 1) reader.fail("vertex count must be at least 1");
    if (k < 1) reader.fail("color count must be at least 1");
    std::vector<int> colors(n, 0);
    for (long long i = 0; i < n; ++i) {
        if (!reader.next(line))
            reader.fail("expected " + std::to_string(n) + " vertex lines, got " +
                        std::to_string(i));
        auto cw = io_detail::split_words(line);
        if (cw.size() != 2)
            reader.fail("expected '<vertex> <color>', got '" + line + "'");
        long long v = io_detail::parse_int(reader, cw[0]);
        long long c = io_detail::parse_int(reader, cw[1]);
        if (v != i) reader.fail("vertices must appear in order; expected " +
                                std::to_string(i) + ", got " + std::to_string(v));
        if (c < 1 || c > k)
            reader.fail("color " + std::to_string(c) + " outside 1.." +
                        std::to_string(k));
        colors[i] = static_cast<int>(c);
    }
    Coloring result{std::move(colors)};
    if (result.k() != k)
        reader.fail("header promises " + std::to_string(k) +
                    " colors but only " + std::to_string(result.k()) + " are used");
    return result;
}

inline Coloring parse_coloring(std::istream& in,
                               const std::string& source = "<input>") {
    LineReader reader(in, source);
    return parse_coloring(reader);
}

inline std::string format_coloring(const Coloring& c) {
    std::ostringstream out;
    out << "coloring " << c.size() << " " << c.k() << "\n";
    for (int v = 0; v < c.size(); ++v) out << v << " " << c.color(v) << "\n";
    return out.str();
}

/// Palm spec file: a single line `palm <a_1>,<a_2>,...,<a_n>`.
inline PalmSpec parse_palm_spec(LineReader& reader) {
    std::string line;
    if (!reader.next_nonempty(line)) reader.fail("expected a 'palm <arms>' line");
    auto words = io_detail::split_words(line);
    if (words.size() != 2 || words[0] != "palm")
        reader.fail("expected 'palm <a_1>,<a_2>,...', got '" + line + "'");
    PalmSpec spec;
    std::string item;
    std::istringstream list(words[1]);
    while (std::getline(list, item, ','))
        spec.arms.push_back(static_cast<int>(io_detail::parse_int(reader, item)));
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        reader.fail(e.what());
    }
    return spec;
}

inline PalmSpec parse_palm_spec(std::istream& in,
                                const std::string& source = "<input>") {
    LineReader reader(in, source);
    return parse_palm_spec(reader);
}

inline std::string format_palm_spec(const PalmSpec& spec) {
    std::ostringstream out;
    out << "palm ";
    for (size_t i = 0; i < spec.arms.size(); ++i) {
        if (i) out << ",";
        out << spec.arms[i];
    }
    out << "\n";
    return out.str();
}

/// DOT text for a tree, with colors as node labels when a coloring is
/// given. Nodes and edges come out sorted for stable diffs.
inline std::string to_dot(const Tree& t, const Coloring* coloring = nullptr) {
    std::ostringstream out;
    out << "graph tree {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < t.size(); ++v) {
        out << "  " << v;
        if (coloring) out << " [label=\"" << coloring->color(v) << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : t.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace locchroma
