#pragma once

#include <random>
#include <vector>

#include "locchroma/tree.hpp"

namespace locchroma {

/// Uniform random labeled tree on n vertices, decoded from a random
/// degree (Pruefer) sequence. Deterministic for a given generator state.
inline Tree random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_tree needs n >= 1");
    if (n == 1) return Tree(1, {});
    if (n == 2) return Tree(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = pick(rng);

    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree(n, std::move(edges));
}

}  // namespace locchroma
