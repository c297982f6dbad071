#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "locchroma/tree.hpp"

namespace locchroma {

/// Total vertex coloring with colors 1..k. Construction normalizes the
/// colors to a gapless 1..k range (order-preserving), so k always equals
/// the number of colors actually used.
class Coloring {
public:
    explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
        if (colors_.empty())
            throw std::invalid_argument("coloring must cover at least one vertex");
        for (int c : colors_)
            if (c < 1)
                throw std::invalid_argument("colors must be positive");
        std::vector<int> used(colors_);
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        k_ = static_cast<int>(used.size());
        for (int& c : colors_)
            c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) -
                                 used.begin()) + 1;
    }

    int size() const { return static_cast<int>(colors_.size()); }
    int k() const { return k_; }
    int color(int v) const { return colors_[v]; }
    const std::vector<int>& colors() const { return colors_; }

    /// Vertices of one color class, ascending.
    std::vector<int> color_class(int c) const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (colors_[v] == c) out.push_back(v);
        return out;
    }

    bool operator==(const Coloring& other) const = default;

private:
    std::vector<int> colors_;
    int k_;
};

/// codes[v][i] = d(v, c^{-1}(i+1)) for i = 0..k-1.
struct ColorCodeTable {
    std::vector<std::vector<int>> codes;
};

/// Color codes via one multi-source BFS per color class.
inline ColorCodeTable color_codes(const Tree& t, const Coloring& c) {
    if (c.size() != t.size())
        throw std::invalid_argument("coloring covers " + std::to_string(c.size()) +
                                    " vertices, tree has " + std::to_string(t.size()));
    ColorCodeTable table;
    table.codes.assign(t.size(), std::vector<int>(c.k(), 0));
    for (int color = 1; color <= c.k(); ++color) {
        std::vector<int> dist = t.distances_from_set(c.color_class(color));
        for (int v = 0; v < t.size(); ++v) table.codes[v][color - 1] = dist[v];
    }
    return table;
}

struct VerifyReport {
    struct Duplicate {
        int u;
        int v;
        std::vector<int> code;
    };
    static constexpr int kDuplicateCap = 1000;

    bool is_proper = false;
    bool is_locating = false;
    int colors_used = 0;
    std::vector<std::pair<int, int>> improper_edges;
    std::vector<Duplicate> duplicate_pairs;  // capped at kDuplicateCap
    long long duplicate_count = 0;           // total, uncapped
};

/// Decides whether a coloring is proper and locating. Lists every
/// improper edge and every pair of vertices with equal color codes
/// (pair list capped, total count exact).
inline VerifyReport verify(const Tree& t, const Coloring& c) {
    VerifyReport report;
    report.colors_used = c.k();
    for (const auto& [u, v] : t.edges())
        if (c.color(u) == c.color(v)) report.improper_edges.emplace_back(u, v);
    report.is_proper = report.improper_edges.empty();

    ColorCodeTable table = color_codes(t, c);
    std::vector<int> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (table.codes[a] != table.codes[b]) return table.codes[a] < table.codes[b];
        return a < b;
    });
    for (int i = 0; i < t.size();) {
        int j = i;
        while (j < t.size() && table.codes[order[j]] == table.codes[order[i]]) ++j;
        long long group = j - i;
        report.duplicate_count += group * (group - 1) / 2;
        for (int a = i; a < j; ++a)
            for (int b = a + 1; b < j; ++b)
                if (static_cast<int>(report.duplicate_pairs.size()) <
                    VerifyReport::kDuplicateCap)
                    report.duplicate_pairs.push_back(
                        {std::min(order[a], order[b]), std::max(order[a], order[b]),
                         table.codes[order[i]]});
        i = j;
    }
    report.is_locating = report.is_proper && report.duplicate_count == 0;
    return report;
}

/// Raised when a coloring that is required to be locating is not.
class VerificationError : public std::runtime_error {
public:
    VerificationError(const std::string& msg, VerifyReport report)
        : std::runtime_error(msg), report_(std::move(report)) {}
    const VerifyReport& report() const { return report_; }

private:
    VerifyReport report_;
};

/// Certified upper bound: the color count of a verified locating coloring.
inline int chi_upper_witness(const Tree& t, const Coloring& c) {
    VerifyReport report = verify(t, c);
    if (!report.is_locating)
        throw VerificationError("coloring is not locating", std::move(report));
    return c.k();
}

}  // namespace locchroma
