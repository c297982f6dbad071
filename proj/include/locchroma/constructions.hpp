#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locchroma/coloring.hpp"
#include "locchroma/formulas.hpp"
#include "locchroma/tree.hpp"

namespace locchroma {

/// First `length` entries of the arm sequence A_i under a color budget k.
///
/// The arm index is split as i = 4l + r with r in {1,2,3,4}; r selects the
/// alternating base pair ((2,1), (3,1), (2,3) or (3,2)), and each nonzero
/// base-3 digit l_t of l (weight 3^(t-4), t = 4..k) overwrites position
/// 2t + l_t - 6 with color t. Positions past `length` are dropped, so short
/// arms may lose their higher colors; callers verify the result.
inline std::vector<int> algorithm2_sequence(long long i, int k, int length) {
    if (k < 3) throw std::invalid_argument("algorithm2_sequence needs k >= 3");
    if (length < 1) throw std::invalid_argument("algorithm2_sequence needs length >= 1");
    long long cap = 4;
    for (int t = 3; t < k; ++t) cap *= 3;
    if (i < 1 || i > cap)
        throw std::invalid_argument("arm index " + std::to_string(i) +
                                    " out of range for k = " + std::to_string(k));
    int r = static_cast<int>((i - 1) % 4) + 1;
    long long l = (i - r) / 4;
    static constexpr int kAlternating[5][2] = {{0, 0}, {2, 1}, {3, 1}, {2, 3}, {3, 2}};
    std::vector<int> seq(length);
    for (int j = 0; j < length; ++j) seq[j] = kAlternating[r][j % 2];
    for (int t = 4; t <= k; ++t) {
        int digit = static_cast<int>(l % 3);
        l /= 3;
        if (digit == 0) continue;
        int pos = 2 * t + digit - 6;  // always >= 3, distinct across t
        if (pos <= length) seq[pos - 1] = t;
    }
    return seq;
}

/// Candidate coloring of a palm with chi_olive(n) colors: hub colored 1,
/// arm i colored by its sequence A_i. Locating whenever the arms are long
/// enough to carry their modified positions; the caller verifies.
inline Coloring algorithm2_color(const PalmSpec& spec) {
    spec.validate();
    int n = spec.arm_count();
    int k = chi_olive(n);
    std::vector<int> colors(spec.vertex_count());
    colors[0] = 1;
    int next = 1;
    for (int arm = 1; arm <= n; ++arm)
        for (int c : algorithm2_sequence(arm, k, spec.arms[arm - 1])) colors[next++] = c;
    return Coloring(std::move(colors));
}

/// The (n+1)-coloring that is locating on every palm: hub colored n+1,
/// arm i alternating i, n+1 starting at i.
inline Coloring palm_full_coloring(const PalmSpec& spec) {
    spec.validate();
    int n = spec.arm_count();
    std::vector<int> colors(spec.vertex_count());
    colors[0] = n + 1;
    int next = 1;
    for (int arm = 1; arm <= n; ++arm)
        for (int j = 1; j <= spec.arms[arm - 1]; ++j)
            colors[next++] = j % 2 == 1 ? arm : n + 1;
    return Coloring(std::move(colors));
}

/// The n-coloring of a palm that is not a star: the longest arm alternates
/// 2,3 from the hub, every other arm alternates its own index with 1, and
/// the hub is colored 1. Needs n >= 3; with two arms the palm is a path and
/// no n-coloring can be locating.
inline Coloring palm_nonstar_coloring(const PalmSpec& spec) {
    spec.validate();
    int n = spec.arm_count();
    if (n < 3)
        throw std::invalid_argument("palm_nonstar_coloring needs at least 3 arms");
    if (spec.is_star())
        throw std::invalid_argument("palm_nonstar_coloring rejects stars");
    int longest = 0;
    for (int i = 1; i < n; ++i)
        if (spec.arms[i] > spec.arms[longest]) longest = i;
    std::vector<int> colors(spec.vertex_count());
    colors[0] = 1;
    int next = 1;
    int role = 1;  // the longest arm takes role 1, the rest follow in order
    for (int arm = 0; arm < n; ++arm) {
        int r = arm == longest ? 1 : ++role;
        for (int j = 1; j <= spec.arms[arm]; ++j) {
            if (r == 1)
                colors[next++] = j % 2 == 1 ? 2 : 3;
            else
                colors[next++] = j % 2 == 1 ? r : 1;
        }
    }
    return Coloring(std::move(colors));
}

/// Locating coloring of S_n(2) with ceil(sqrt(n)) + 1 colors. Arm i is
/// colored by the i-th pair of {(x,y) : x in 1..p, y in 1..p+1, y != x} in
/// lexicographic order; the hub gets p+1.
inline std::pair<Tree, Coloring> sn2_coloring(int n) {
    if (n < 2) throw std::invalid_argument("sn2_coloring needs n >= 2");
    int p = static_cast<int>(ceil_sqrt(n));
    Tree t = build_regular_palm(n, 2);
    std::vector<int> colors(t.size());
    colors[0] = p + 1;
    int next = 1, produced = 0;
    for (int x = 1; x <= p && produced < n; ++x)
        for (int y = 1; y <= p + 1 && produced < n; ++y) {
            if (y == x) continue;
            colors[next++] = x;
            colors[next++] = y;
            ++produced;
        }
    Coloring c(std::move(colors));
    VerifyReport report = verify(t, c);
    if (!report.is_locating)
        throw VerificationError("sn2_coloring produced a non-locating coloring",
                                std::move(report));
    return {std::move(t), std::move(c)};
}

/// Locating coloring of S_n(3) with k = f_threshold(n) colors. The arm
/// triples come from four families over A = {1..ceil(k/2)} and
/// B = {ceil(k/2)+1..k-1}, each family in lexicographic order:
///   S1 = (a,b,a)  a in A, b in B
///   S2 = (a,b,c)  a in A, b,c in B, b != c
///   S3 = (a,b,a)  a in A, b in (A u {k}) \ {a}
///   S4 = (a,b,c)  a in A, b in (A u {k}) \ {a}, c in B
/// The hub gets k. The four families together hold exactly f(k) triples.
inline std::pair<Tree, Coloring> sn3_coloring(int n) {
    if (n < 2) throw std::invalid_argument("sn3_coloring needs n >= 2");
    int k = static_cast<int>(f_threshold_k(n));
    int half = (k + 1) / 2;
    std::vector<int> a_side, b_side, a_hub;
    for (int v = 1; v <= half; ++v) a_side.push_back(v);
    for (int v = half + 1; v <= k - 1; ++v) b_side.push_back(v);
    a_hub = a_side;
    a_hub.push_back(k);

    std::vector<std::array<int, 3>> triples;
    for (int a : a_side)
        for (int b : b_side) triples.push_back({a, b, a});
    for (int a : a_side)
        for (int b : b_side)
            for (int c : b_side)
                if (c != b) triples.push_back({a, b, c});
    for (int a : a_side)
        for (int b : a_hub)
            if (b != a) triples.push_back({a, b, a});
    for (int a : a_side)
        for (int b : a_hub) {
            if (b == a) continue;
            for (int c : b_side) triples.push_back({a, b, c});
        }
    if (static_cast<long long>(triples.size()) != f_eval(k))
        throw std::logic_error("sn3 triple families do not add up to f(k)");

    Tree t = build_regular_palm(n, 3);
    std::vector<int> colors(t.size());
    colors[0] = k;
    int next = 1;
    for (int i = 0; i < n; ++i)
        for (int c : triples[i]) colors[next++] = c;
    Coloring c(std::move(colors));
    VerifyReport report = verify(t, c);
    if (!report.is_locating)
        throw VerificationError("sn3_coloring produced a non-locating coloring",
                                std::move(report));
    return {std::move(t), std::move(c)};
}

/// Upper-bound coloring of S_n(k) from the product of residue classes
/// A_i = {a <= p : a ≡ i (mod k)}: p is the smallest integer whose class
/// sizes multiply to at least n, the hub gets p+1 and arm i gets the i-th
/// tuple of A_1 x ... x A_k in lexicographic order. The full product is
/// known to work; prefixes are verified here and a failure is surfaced.
inline std::pair<Tree, Coloring> product_coloring(int n, int k) {
    if (n < 2) throw std::invalid_argument("product_coloring needs n >= 2");
    if (k < 1) throw std::invalid_argument("product_coloring needs k >= 1");
    auto class_of = [&](int p, int residue) {
        std::vector<int> members;
        for (int a = residue; a <= p; a += k) members.push_back(a);
        return members;
    };
    int p = 0;
    std::vector<std::vector<int>> classes;
    for (;;) {
        ++p;
        classes.clear();
        long long product = 1;
        for (int i = 1; i <= k; ++i) {
            classes.push_back(class_of(p, i));
            product *= static_cast<long long>(classes.back().size());
            if (product > n) product = n;  // avoid overflow, n is enough
        }
        if (product >= n) break;
    }
    Tree t = build_regular_palm(n, k);
    std::vector<int> colors(t.size());
    colors[0] = p + 1;
    std::vector<int> odometer(k, 0);
    int next = 1;
    for (int arm = 0; arm < n; ++arm) {
        for (int j = 0; j < k; ++j) colors[next++] = classes[j][odometer[j]];
        for (int j = k - 1; j >= 0; --j) {
            if (++odometer[j] < static_cast<int>(classes[j].size())) break;
            odometer[j] = 0;
        }
    }
    Coloring c(std::move(colors));
    VerifyReport report = verify(t, c);
    if (!report.is_locating)
        throw VerificationError("product_coloring prefix failed verification at n = " +
                                    std::to_string(n) + ", k = " + std::to_string(k),
                                std::move(report));
    return {std::move(t), std::move(c)};
}

/// Locating 3-coloring of a path (2 colors for an edge, 1 for a point):
/// 2,1,3,1,3,... along the path. The lone color-2 vertex pins every
/// distance, so the codes are always distinct.
inline Coloring path_coloring(const Tree& t) {
    if (!t.is_path()) throw std::invalid_argument("path_coloring needs a path");
    if (t.size() == 1) return Coloring({1});
    int start = -1;
    for (int v = 0; v < t.size() && start < 0; ++v)
        if (t.degree(v) == 1) start = v;
    std::vector<int> colors(t.size());
    int prev = -1, cur = start;
    for (int pos = 0; pos < t.size(); ++pos) {
        if (t.size() == 2)
            colors[cur] = pos + 1;
        else
            colors[cur] = pos == 0 ? 2 : pos % 2 == 1 ? 1 : 3;
        int nxt = -1;
        for (int w : t.neighbors(cur))
            if (w != prev) nxt = w;
        prev = cur;
        cur = nxt;
    }
    return Coloring(std::move(colors));
}

struct PalmWitness {
    Coloring coloring;
    std::string method;
};

/// Best verified construction for a palm, by color count; ties go to the
/// earlier candidate. The full (n+1)-coloring always applies, so this
/// never comes back empty.
inline PalmWitness best_palm_coloring(const PalmSpec& spec) {
    spec.validate();
    Tree t = build_palm(spec);
    std::optional<PalmWitness> best;
    auto consider = [&](const char* name, auto&& make) {
        std::optional<Coloring> candidate;
        try {
            candidate = make();
        } catch (const std::invalid_argument&) {
            return;
        } catch (const VerificationError&) {
            return;
        }
        if (!candidate || !verify(t, *candidate).is_locating) return;
        if (!best || candidate->k() < best->coloring.k())
            best = PalmWitness{*candidate, name};
    };
    consider("algo2", [&] { return algorithm2_color(spec); });
    consider("sn2", [&]() -> std::optional<Coloring> {
        if (!spec.is_regular() || spec.arms.front() != 2) return std::nullopt;
        return sn2_coloring(spec.arm_count()).second;
    });
    consider("sn3", [&]() -> std::optional<Coloring> {
        if (!spec.is_regular() || spec.arms.front() != 3) return std::nullopt;
        return sn3_coloring(spec.arm_count()).second;
    });
    consider("product", [&]() -> std::optional<Coloring> {
        if (!spec.is_regular()) return std::nullopt;
        return product_coloring(spec.arm_count(), spec.arms.front()).second;
    });
    consider("nonstar", [&] { return palm_nonstar_coloring(spec); });
    consider("full", [&] { return palm_full_coloring(spec); });
    if (!best) throw std::logic_error("no palm construction verified");
    return *best;
}

/// Locating coloring of a whole tree from locating colorings of its
/// end-palms, keyed by branch vertex and written in the palm's canonical
/// numbering.
///
/// A parity 2-coloring from vertex 0 covers everything outside the palms.
/// Each palm coloring is relabeled so that its branch keeps its parity
/// color x and the first arm's neighbor gets y = 3-x, the remaining colors
/// moving order-preserved onto 3..q; colors above 2 are then shifted past
/// the blocks used by earlier palms (ascending branch order). Color count:
/// 2 - 2b + sum of the palm color counts.
inline Coloring algorithm1_color(const Tree& t,
                                 const std::map<int, Coloring>& palm_colorings) {
    Decomposition d = decompose(t);
    if (d.end_palms.empty())
        throw std::invalid_argument("algorithm1_color needs a non-path tree");
    std::vector<int> dist0 = t.distances_from(0);
    std::vector<int> colors(t.size());
    for (int v = 0; v < t.size(); ++v) colors[v] = dist0[v] % 2 + 1;

    int offset = 0;
    for (const EndPalm& palm : d.end_palms) {
        auto it = palm_colorings.find(palm.branch);
        if (it == palm_colorings.end())
            throw std::invalid_argument("no palm coloring for branch " +
                                        std::to_string(palm.branch));
        const Coloring& local = it->second;
        PalmSpec spec = end_palm_spec(palm);
        if (local.size() != spec.vertex_count())
            throw std::invalid_argument("palm coloring at branch " +
                                        std::to_string(palm.branch) +
                                        " has the wrong vertex count");
        VerifyReport report = verify(build_palm(spec), local);
        if (!report.is_locating)
            throw VerificationError("palm coloring at branch " +
                                        std::to_string(palm.branch) +
                                        " is not locating",
                                    std::move(report));
        int q = local.k();
        int x = colors[palm.branch];
        int y = 3 - x;
        int hub_color = local.color(0);
        int first_arm_color = local.color(1);  // proper, so distinct from the hub's
        std::vector<int> relabel(q + 1, 0);
        relabel[hub_color] = x;
        relabel[first_arm_color] = y;
        int fresh = 3;
        for (int c = 1; c <= q; ++c)
            if (c != hub_color && c != first_arm_color) relabel[c] = fresh++;
        std::vector<int> to_tree = end_palm_to_tree(palm);
        for (int idx = 0; idx < local.size(); ++idx) {
            int mapped = relabel[local.color(idx)];
            colors[to_tree[idx]] = mapped <= 2 ? mapped : mapped + offset;
        }
        offset += q - 2;
    }
    Coloring result(std::move(colors));
    VerifyReport report = verify(t, result);
    if (!report.is_locating)
        throw VerificationError("tree coloring failed verification",
                                std::move(report));
    return result;
}

/// Best-construction witnesses for every end-palm of a tree.
inline std::map<int, Coloring> auto_palm_witnesses(const Tree& t) {
    std::map<int, Coloring> out;
    for (const EndPalm& palm : decompose(t).end_palms)
        out.emplace(palm.branch, best_palm_coloring(end_palm_spec(palm)).coloring);
    return out;
}

struct TreeColoring {
    Coloring coloring;
    std::string method;
};

/// Transplant a coloring along an index map (canonical palm -> tree).
inline Coloring remap_coloring(const Coloring& c, const std::vector<int>& to_tree,
                               int tree_size) {
    std::vector<int> colors(tree_size, 0);
    for (int idx = 0; idx < c.size(); ++idx) colors[to_tree[idx]] = c.color(idx);
    return Coloring(std::move(colors));
}

/// Best applicable construction for any tree: a dedicated 3-coloring for
/// paths, the best palm construction when the tree is a palm, and the
/// end-palm composition for everything else.
inline TreeColoring auto_color(const Tree& t) {
    if (t.is_path()) return {path_coloring(t), "path"};
    if (auto rec = recover_palm(t)) {
        PalmWitness w = best_palm_coloring(rec->spec);
        return {remap_coloring(w.coloring, rec->to_tree, t.size()), w.method};
    }
    return {algorithm1_color(t, auto_palm_witnesses(t)), "tree"};
}

}  // namespace locchroma
