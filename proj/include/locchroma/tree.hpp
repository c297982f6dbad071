#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locchroma {

/// Undirected unweighted tree on vertices 0..n-1. Immutable after
/// construction; construction validates edge count, simplicity and
/// connectivity. Adjacency lists are kept sorted so that traversal
/// orders (and everything derived from them) are deterministic.
class Tree {
public:
    Tree(int n, std::vector<std::pair<int, int>> edge_list)
        : n_(n), edges_(std::move(edge_list)) {
        if (n_ < 1)
            throw std::invalid_argument("tree needs at least one vertex");
        if (static_cast<int>(edges_.size()) != n_ - 1)
            throw std::invalid_argument("tree on " + std::to_string(n_) +
                                        " vertices needs " + std::to_string(n_ - 1) +
                                        " edges, got " + std::to_string(edges_.size()));
        for (auto& [u, v] : edges_) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("parallel edge");
        adj_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        // n-1 edges + full reachability == tree
        if (count_reachable(0) != n_)
            throw std::invalid_argument("graph is not connected");
    }

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_path() const { return max_degree() <= 2; }

    /// BFS distances from a single source.
    std::vector<int> distances_from(int source) const {
        std::vector<int> dist(n_, -1);
        std::queue<int> q;
        dist[source] = 0;
        q.push(source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        return dist;
    }

    /// BFS distances from a set of sources (distance to the nearest one).
    std::vector<int> distances_from_set(const std::vector<int>& sources) const {
        std::vector<int> dist(n_, -1);
        std::queue<int> q;
        for (int s : sources)
            if (dist[s] < 0) {
                dist[s] = 0;
                q.push(s);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        return dist;
    }

    bool operator==(const Tree& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int count_reachable(int source) const {
        std::vector<char> seen(n_, 0);
        std::queue<int> q;
        seen[source] = 1;
        q.push(source);
        int count = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    q.push(w);
                }
        }
        return count;
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Symmetric table of shortest-path lengths, one BFS per vertex.
inline std::vector<std::vector<int>> all_pairs_distances(const Tree& t) {
    std::vector<std::vector<int>> dist;
    dist.reserve(t.size());
    for (int v = 0; v < t.size(); ++v) dist.push_back(t.distances_from(v));
    return dist;
}

/// Arm lengths (a_1,...,a_n) of the palm S_n(a_1,...,a_n).
///
/// Canonical vertex numbering: the hub is vertex 0 and arm i (1-based)
/// occupies indices prefix+1 .. prefix+a_i outward from the hub, where
/// prefix is the total length of the arms before it.
struct PalmSpec {
    std::vector<int> arms;

    void validate() const {
        if (arms.size() < 2)
            throw std::invalid_argument("palm needs at least 2 arms");
        for (int a : arms)
            if (a < 1)
                throw std::invalid_argument("palm arm lengths must be positive");
    }

    int arm_count() const { return static_cast<int>(arms.size()); }

    int vertex_count() const {
        return 1 + std::accumulate(arms.begin(), arms.end(), 0);
    }

    /// Index of a_{arm,pos}; both arguments 1-based.
    int vertex(int arm, int pos) const {
        int prefix = 0;
        for (int i = 0; i + 1 < arm; ++i) prefix += arms[i];
        return prefix + pos;
    }

    bool is_star() const {
        return std::all_of(arms.begin(), arms.end(), [](int a) { return a == 1; });
    }

    bool is_regular() const {
        return std::all_of(arms.begin(), arms.end(),
                           [&](int a) { return a == arms.front(); });
    }

    bool operator==(const PalmSpec& other) const = default;
};

inline Tree build_palm(const PalmSpec& spec) {
    spec.validate();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(spec.vertex_count() - 1);
    int next = 1;
    for (int a : spec.arms) {
        edges.emplace_back(0, next);
        for (int j = 1; j < a; ++j) {
            edges.emplace_back(next, next + 1);
            ++next;
        }
        ++next;
    }
    return Tree(spec.vertex_count(), std::move(edges));
}

/// Olive tree O_n = S_n(1,2,...,n).
inline Tree build_olive(int n) {
    if (n < 2) throw std::invalid_argument("olive tree needs n >= 2");
    std::vector<int> arms(n);
    std::iota(arms.begin(), arms.end(), 1);
    return build_palm(PalmSpec{std::move(arms)});
}

/// Regular palm S_n(k): n arms, all of length k.
inline Tree build_regular_palm(int n, int k) {
    if (n < 2) throw std::invalid_argument("regular palm needs n >= 2");
    if (k < 1) throw std::invalid_argument("regular palm needs k >= 1");
    return build_palm(PalmSpec{std::vector<int>(n, k)});
}

/// A path from a leaf to its nearest branch; vertices run from the
/// branch's neighbor out to the leaf, the branch itself excluded.
struct EndPath {
    int branch;
    std::vector<int> vertices;

    int leaf() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()); }
};

/// A branch with at least two end-paths, together with those paths.
struct EndPalm {
    int branch;
    std::vector<EndPath> paths;  // ordered by first vertex

    int leaf_count() const { return static_cast<int>(paths.size()); }
};

struct Decomposition {
    std::vector<int> leaves;             // degree <= 1, sorted
    std::vector<int> branches;           // degree >= 3, sorted
    std::vector<EndPath> end_paths;      // one per leaf that has a branch, by leaf
    std::vector<EndPalm> end_palms;      // branches with >= 2 end-paths, by branch
    int leaf_count = 0;                  // l
    int branches_with_end_path = 0;      // beta
    int end_branch_count = 0;            // b
};

/// Structural decomposition into leaves, branches, end-paths and
/// end-palms. A path graph has no branches and therefore no end-paths.
inline Decomposition decompose(const Tree& t) {
    if (t.size() < 2)
        throw std::invalid_argument("decompose needs at least 2 vertices");
    Decomposition d;
    for (int v = 0; v < t.size(); ++v) {
        if (t.degree(v) <= 1) d.leaves.push_back(v);
        if (t.degree(v) >= 3) d.branches.push_back(v);
    }
    d.leaf_count = static_cast<int>(d.leaves.size());
    for (int leaf : d.leaves) {
        // walk inward until a branch shows up; a path graph never has one
        std::vector<int> walk{leaf};
        int prev = -1, cur = leaf;
        while (t.degree(cur) <= 2) {
            int next = -1;
            for (int w : t.neighbors(cur))
                if (w != prev) next = w;
            if (next < 0) break;  // other end of a path graph
            prev = cur;
            cur = next;
            walk.push_back(cur);
        }
        if (t.degree(cur) < 3) continue;
        walk.pop_back();  // drop the branch
        std::reverse(walk.begin(), walk.end());
        d.end_paths.push_back(EndPath{cur, std::move(walk)});
    }
    std::sort(d.end_paths.begin(), d.end_paths.end(),
              [](const EndPath& a, const EndPath& b) { return a.leaf() < b.leaf(); });
    for (int branch : d.branches) {
        EndPalm palm{branch, {}};
        for (const auto& p : d.end_paths)
            if (p.branch == branch) palm.paths.push_back(p);
        if (palm.paths.empty()) continue;
        ++d.branches_with_end_path;
        if (palm.paths.size() < 2) continue;
        std::sort(palm.paths.begin(), palm.paths.end(),
                  [](const EndPath& a, const EndPath& b) {
                      return a.vertices.front() < b.vertices.front();
                  });
        d.end_palms.push_back(std::move(palm));
    }
    d.end_branch_count = static_cast<int>(d.end_palms.size());
    return d;
}

/// Arm lengths of an end-palm, in its path order.
inline PalmSpec end_palm_spec(const EndPalm& palm) {
    std::vector<int> arms;
    arms.reserve(palm.paths.size());
    for (const auto& p : palm.paths) arms.push_back(p.length());
    return PalmSpec{std::move(arms)};
}

/// Map from the end-palm's canonical numbering (hub 0, arms outward)
/// to the vertices of the host tree.
inline std::vector<int> end_palm_to_tree(const EndPalm& palm) {
    std::vector<int> map{palm.branch};
    for (const auto& p : palm.paths)
        map.insert(map.end(), p.vertices.begin(), p.vertices.end());
    return map;
}

struct RecoveredPalm {
    PalmSpec spec;
    std::vector<int> to_tree;  // canonical palm index -> tree vertex
};

/// Reads palm structure back out of a tree: a tree with exactly one
/// branch is a palm rooted there; a path on >= 3 vertices is treated as
/// a two-armed palm split at its middle vertex. Anything else is not a
/// palm.
inline std::optional<RecoveredPalm> recover_palm(const Tree& t) {
    if (t.size() < 3) return std::nullopt;
    if (t.is_path()) {
        std::vector<int> order;
        int start = -1;
        for (int v = 0; v < t.size() && start < 0; ++v)
            if (t.degree(v) == 1) start = v;
        int prev = -1, cur = start;
        order.push_back(cur);
        while (static_cast<int>(order.size()) < t.size()) {
            int next = -1;
            for (int w : t.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
            order.push_back(cur);
        }
        int hub_pos = (t.size() - 1) / 2;
        std::vector<int> left(order.rend() - hub_pos, order.rend());
        std::vector<int> right(order.begin() + hub_pos + 1, order.end());
        RecoveredPalm rec;
        rec.to_tree.push_back(order[hub_pos]);
        if (left.front() > right.front()) std::swap(left, right);
        rec.spec.arms = {static_cast<int>(left.size()), static_cast<int>(right.size())};
        rec.to_tree.insert(rec.to_tree.end(), left.begin(), left.end());
        rec.to_tree.insert(rec.to_tree.end(), right.begin(), right.end());
        return rec;
    }
    Decomposition d = decompose(t);
    if (d.branches.size() != 1) return std::nullopt;
    const EndPalm& palm = d.end_palms.front();
    return RecoveredPalm{end_palm_spec(palm), end_palm_to_tree(palm)};
}

}  // namespace locchroma
