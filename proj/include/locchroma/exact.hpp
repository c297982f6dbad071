#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "locchroma/coloring.hpp"
#include "locchroma/formulas.hpp"
#include "locchroma/tree.hpp"

namespace locchroma {

struct ExactOptions {
    std::optional<int> max_colors{};  // exhausting the cap yields no result
    int vertex_limit = 18;
    int threads = 1;
};

struct ExactResult {
    int chi_l;
    Coloring witness;
    std::uint64_t nodes_explored;
    std::uint64_t complete_colorings;
    double seconds;
};

/// Analytic lower bound driving the search: the degree bound for
/// Delta >= 3, 3 for any larger path-like tree, 2 for an edge.
inline int exact_lower_bound(const Tree& t) {
    if (t.size() == 1) return 1;
    if (t.size() == 2) return 2;
    int delta = t.max_degree();
    return delta >= 3 ? delta_lower_bound(delta) : 3;
}

namespace detail {

// Backtracking over proper colorings in canonical first-use order:
// vertices are filled in BFS order from vertex 0 and each choice is at
// most one above the largest color used so far, which enumerates every
// proper coloring exactly once per color-permutation class. In a tree
// the only already-colored neighbor of a vertex is its BFS parent, so
// properness is a single comparison. At budget k only colorings using
// all k colors get the locating check; anything smaller was covered by
// an earlier k (or ruled out by the analytic lower bound).
class ExactSearcher {
public:
    explicit ExactSearcher(const Tree& tree) : t_(tree), n_(tree.size()) {
        order_.reserve(n_);
        parent_pos_.assign(n_, -1);
        std::vector<int> pos_of(n_, -1);
        std::queue<int> q;
        q.push(0);
        pos_of[0] = 0;
        order_.push_back(0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : t_.neighbors(u))
                if (pos_of[w] < 0) {
                    pos_of[w] = static_cast<int>(order_.size());
                    parent_pos_[pos_of[w]] = pos_of[u];
                    order_.push_back(w);
                    q.push(w);
                }
        }
        dist_ = all_pairs_distances(t_);
    }

    struct Stats {
        std::uint64_t nodes = 0;
        std::uint64_t completes = 0;
    };

    const std::vector<int>& order() const { return order_; }

    /// First locating coloring with exactly k colors in canonical order,
    /// as an assignment by BFS position.
    std::optional<std::vector<int>> run(int k, int threads, Stats& stats) const {
        if (threads <= 1 || n_ < 4) {
            Scratch scratch(n_, k);
            std::vector<int> assign(n_, 0);
            return descend(k, assign, 0, 0, scratch, stats);
        }
        return run_parallel(k, threads, stats);
    }

private:
    struct Scratch {
        Scratch(int n, int k)
            : vertex_color(n), code(static_cast<size_t>(n) * k), fingerprint(n),
              row_order(n) {}
        std::vector<int> vertex_color;
        std::vector<int> code;
        std::vector<std::uint64_t> fingerprint;
        std::vector<int> row_order;
    };

    bool locating(const std::vector<int>& assign, int k, Scratch& s) const {
        for (int p = 0; p < n_; ++p) s.vertex_color[order_[p]] = assign[p];
        constexpr int kInf = std::numeric_limits<int>::max();
        std::fill(s.code.begin(), s.code.end(), kInf);
        for (int u = 0; u < n_; ++u) {
            const std::vector<int>& du = dist_[u];
            int* row = s.code.data() + static_cast<size_t>(u) * k;
            for (int w = 0; w < n_; ++w) {
                int slot = s.vertex_color[w] - 1;
                if (du[w] < row[slot]) row[slot] = du[w];
            }
        }
        // equal rows always share a fingerprint, so the exact comparison
        // only needs to run inside fingerprint ties
        const int* code = s.code.data();
        for (int v = 0; v < n_; ++v) {
            const int* row = code + static_cast<size_t>(v) * k;
            std::uint64_t h = 1469598103934665603ull;
            for (int i = 0; i < k; ++i) {
                h ^= static_cast<std::uint64_t>(row[i]);
                h *= 1099511628211ull;
            }
            s.fingerprint[v] = h;
            s.row_order[v] = v;
        }
        std::sort(s.row_order.begin(), s.row_order.end(),
                  [&](int a, int b) { return s.fingerprint[a] < s.fingerprint[b]; });
        for (int i = 0; i < n_;) {
            int j = i;
            while (j < n_ &&
                   s.fingerprint[s.row_order[j]] == s.fingerprint[s.row_order[i]])
                ++j;
            for (int a = i; a < j; ++a)
                for (int b = a + 1; b < j; ++b) {
                    const int* ra = code + static_cast<size_t>(s.row_order[a]) * k;
                    const int* rb = code + static_cast<size_t>(s.row_order[b]) * k;
                    bool equal = true;
                    for (int i2 = 0; i2 < k && equal; ++i2) equal = ra[i2] == rb[i2];
                    if (equal) return false;
                }
            i = j;
        }
        return true;
    }

    std::optional<std::vector<int>> descend(int k, std::vector<int>& assign, int pos,
                                            int max_used, Scratch& scratch,
                                            Stats& stats) const {
        ++stats.nodes;
        if (k - max_used > n_ - pos) return std::nullopt;  // can't reach k colors
        if (pos == n_) {
            ++stats.completes;
            if (locating(assign, k, scratch)) return assign;
            return std::nullopt;
        }
        int limit = std::min(max_used + 1, k);
        int banned = parent_pos_[pos] >= 0 ? assign[parent_pos_[pos]] : 0;
        for (int c = 1; c <= limit; ++c) {
            if (c == banned) continue;
            assign[pos] = c;
            if (auto found =
                    descend(k, assign, pos + 1, std::max(max_used, c), scratch, stats))
                return found;
        }
        return std::nullopt;
    }

    struct Prefix {
        std::vector<int> assign;
        int max_used;
    };

    std::vector<Prefix> expand_prefixes(int k, int target) const {
        std::vector<Prefix> states{{{}, 0}};
        int depth = 0;
        while (depth < n_ - 1 && static_cast<int>(states.size()) < target) {
            std::vector<Prefix> next;
            for (const Prefix& st : states) {
                int limit = std::min(st.max_used + 1, k);
                int banned =
                    parent_pos_[depth] >= 0 ? st.assign[parent_pos_[depth]] : 0;
                for (int c = 1; c <= limit; ++c) {
                    if (c == banned) continue;
                    Prefix ext{st.assign, std::max(st.max_used, c)};
                    ext.assign.push_back(c);
                    next.push_back(std::move(ext));
                }
            }
            states = std::move(next);
            ++depth;
            if (states.empty()) break;
        }
        return states;
    }

    // Workers cover the canonical prefixes in blocks; a worker skips any
    // prefix with a larger index than an already-found solution, and the
    // smallest-index solution wins, so chi and witness match the
    // sequential run exactly. The work counters are diagnostics only.
    std::optional<std::vector<int>> run_parallel(int k, int threads,
                                                 Stats& stats) const {
        std::vector<Prefix> states = expand_prefixes(k, threads * 8);
        if (states.empty()) return std::nullopt;
        int depth = static_cast<int>(states.front().assign.size());
        std::atomic<long> winner{std::numeric_limits<long>::max()};
        std::vector<std::optional<std::vector<int>>> findings(states.size());
        std::atomic<std::uint64_t> nodes{0}, completes{0};
        auto work = [&](int worker) {
            Scratch scratch(n_, k);
            Stats local;
            for (size_t idx = worker; idx < states.size();
                 idx += static_cast<size_t>(threads)) {
                if (static_cast<long>(idx) > winner.load()) continue;
                std::vector<int> assign(n_, 0);
                std::copy(states[idx].assign.begin(), states[idx].assign.end(),
                          assign.begin());
                if (auto found = descend(k, assign, depth, states[idx].max_used,
                                         scratch, local)) {
                    findings[idx] = std::move(found);
                    long expected = winner.load();
                    while (expected > static_cast<long>(idx) &&
                           !winner.compare_exchange_weak(expected,
                                                         static_cast<long>(idx))) {
                    }
                }
            }
            nodes += local.nodes;
            completes += local.completes;
        };
        std::vector<std::future<void>> futures;
        for (int w = 0; w < threads; ++w)
            futures.push_back(std::async(std::launch::async, work, w));
        for (auto& f : futures) f.get();
        stats.nodes += nodes.load();
        stats.completes += completes.load();
        for (auto& finding : findings)
            if (finding) return finding;
        return std::nullopt;
    }

    const Tree& t_;
    int n_;
    std::vector<int> order_;
    std::vector<int> parent_pos_;
    std::vector<std::vector<int>> dist_;
};

}  // namespace detail

/// Exact locating chromatic number by exhaustive search, iterating the
/// color budget upward from the analytic lower bound. The returned witness
/// is re-checked by the independent verifier. Comes back empty when
/// max_colors is exhausted without success (the value is then known to be
/// at least max_colors + 1).
inline std::optional<ExactResult> exact_chi_l(const Tree& t,
                                              const ExactOptions& opt = {}) {
    auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             started)
            .count();
    };
    if (t.size() > opt.vertex_limit)
        throw std::invalid_argument(
            "tree has " + std::to_string(t.size()) +
            " vertices, over the exact search limit of " +
            std::to_string(opt.vertex_limit));
    if (t.size() == 1) {
        if (opt.max_colors && *opt.max_colors < 1) return std::nullopt;
        return ExactResult{1, Coloring({1}), 1, 1, elapsed()};
    }
    detail::ExactSearcher searcher(t);
    detail::ExactSearcher::Stats stats;
    int lo = exact_lower_bound(t);
    int hi = t.size();  // the all-distinct coloring is locating
    if (opt.max_colors) hi = std::min(hi, *opt.max_colors);
    for (int k = lo; k <= hi; ++k) {
        auto found = searcher.run(k, opt.threads, stats);
        if (!found) continue;
        std::vector<int> colors(t.size());
        for (int p = 0; p < t.size(); ++p) colors[searcher.order()[p]] = (*found)[p];
        Coloring witness(std::move(colors));
        if (!verify(t, witness).is_locating)
            throw std::logic_error("exact search witness failed verification");
        return ExactResult{k, std::move(witness), stats.nodes, stats.completes,
                           elapsed()};
    }
    return std::nullopt;
}

enum class PalmFamily { olive, regular };

struct SweepRow {
    int n;
    int chi_l;
};

/// exact_chi_l over a generated palm family.
inline std::vector<SweepRow> exact_sweep(PalmFamily family, int arm_length,
                                         int n_from, int n_to,
                                         const ExactOptions& opt = {}) {
    std::vector<SweepRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        Tree t = family == PalmFamily::olive ? build_olive(n)
                                             : build_regular_palm(n, arm_length);
        auto result = exact_chi_l(t, opt);
        if (!result)
            throw std::runtime_error("exact sweep exhausted the color cap at n = " +
                                     std::to_string(n));
        rows.push_back({n, result->chi_l});
    }
    return rows;
}

}  // namespace locchroma
