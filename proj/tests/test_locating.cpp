#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "locchroma/coloring.hpp"
#include "locchroma/constructions.hpp"
#include "locchroma/random_tree.hpp"
#include "locchroma/tree.hpp"

using namespace locchroma;

namespace {

// independent route for the color codes: min over class members in the
// all-pairs distance table
ColorCodeTable codes_from_table(const Tree& t, const Coloring& c) {
    auto dist = all_pairs_distances(t);
    ColorCodeTable table;
    table.codes.assign(t.size(), std::vector<int>(c.k(), t.size()));
    for (int u = 0; u < t.size(); ++u)
        for (int w = 0; w < t.size(); ++w)
            table.codes[u][c.color(w) - 1] =
                std::min(table.codes[u][c.color(w) - 1], dist[u][w]);
    return table;
}

}  // namespace

TEST_CASE("coloring normalizes to a gapless range") {
    Coloring c({5, 2, 5, 9});
    CHECK(c.k() == 3);
    CHECK(c.colors() == std::vector<int>{2, 1, 2, 3});
    CHECK_THROWS_AS(Coloring({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring({}), std::invalid_argument);
    CHECK(Coloring({1, 2, 1}).color_class(1) == std::vector<int>{0, 2});
}

TEST_CASE("color codes on small paths") {
    Tree p3(3, {{0, 1}, {1, 2}});
    ColorCodeTable t1 = color_codes(p3, Coloring({1, 2, 1}));
    CHECK(t1.codes[0] == std::vector<int>{0, 1});
    CHECK(t1.codes[1] == std::vector<int>{1, 0});
    CHECK(t1.codes[2] == std::vector<int>{0, 1});

    ColorCodeTable t2 = color_codes(p3, Coloring({1, 2, 3}));
    CHECK(t2.codes[0] == std::vector<int>{0, 1, 2});
    CHECK(t2.codes[1] == std::vector<int>{1, 0, 1});
    CHECK(t2.codes[2] == std::vector<int>{2, 1, 0});

    Tree p4(4, {{0, 1}, {1, 2}, {2, 3}});
    ColorCodeTable t3 = color_codes(p4, Coloring({1, 2, 3, 2}));
    CHECK(t3.codes[0] == std::vector<int>{0, 1, 2});
    CHECK(t3.codes[1] == std::vector<int>{1, 0, 1});
    CHECK(t3.codes[2] == std::vector<int>{2, 1, 0});
    CHECK(t3.codes[3] == std::vector<int>{3, 0, 1});

    CHECK_THROWS_AS(color_codes(p3, Coloring({1, 2})), std::invalid_argument);
}

TEST_CASE("color codes match the distance-table route on random input") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 15);
        Tree t = random_tree(n, rng);
        std::vector<int> colors(n);
        for (int& c : colors) c = 1 + static_cast<int>(rng() % 4);
        Coloring c(colors);
        ColorCodeTable a = color_codes(t, c);
        ColorCodeTable b = codes_from_table(t, c);
        CHECK(a.codes == b.codes);
        for (int v = 0; v < n; ++v) CHECK(a.codes[v][c.color(v) - 1] == 0);
    }
}

TEST_CASE("verify flags improper and colliding colorings") {
    Tree p3(3, {{0, 1}, {1, 2}});
    VerifyReport bad = verify(p3, Coloring({1, 2, 1}));
    CHECK(bad.is_proper);
    CHECK_FALSE(bad.is_locating);
    CHECK(bad.duplicate_count == 1);
    REQUIRE(bad.duplicate_pairs.size() == 1);
    CHECK(bad.duplicate_pairs[0].u == 0);
    CHECK(bad.duplicate_pairs[0].v == 2);

    VerifyReport improper = verify(p3, Coloring({1, 1, 2}));
    CHECK_FALSE(improper.is_proper);
    CHECK_FALSE(improper.is_locating);
    CHECK(improper.improper_edges ==
          std::vector<std::pair<int, int>>{{0, 1}});

    Tree star = build_regular_palm(3, 1);
    VerifyReport good = verify(star, Coloring({4, 1, 2, 3}));
    CHECK(good.is_locating);
    CHECK(good.colors_used == 4);
}

TEST_CASE("verify is deterministic and idempotent") {
    Tree t = build_olive(5);
    Coloring c = algorithm2_color(PalmSpec{{1, 2, 3, 4, 5}});
    VerifyReport a = verify(t, c);
    VerifyReport b = verify(t, c);
    CHECK(a.is_locating == b.is_locating);
    CHECK(a.duplicate_count == b.duplicate_count);
    CHECK(a.colors_used == b.colors_used);
    CHECK(a.is_locating);
    CHECK(a.colors_used == 4);
}

TEST_CASE("locating colorings have injective codes, never more than n") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        Tree t = random_tree(n, rng);
        std::vector<int> colors(n);
        for (int& c : colors) c = 1 + static_cast<int>(rng() % 5);
        Coloring c(colors);
        ColorCodeTable codes = color_codes(t, c);
        std::vector<std::vector<int>> rows = codes.codes;
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        CHECK(static_cast<int>(rows.size()) <= n);
        VerifyReport rep = verify(t, c);
        if (rep.is_locating) CHECK(static_cast<int>(rows.size()) == n);
    }
}

TEST_CASE("permuting color labels preserves the locating property") {
    std::mt19937_64 rng(2024);
    std::vector<std::pair<Tree, Coloring>> instances;
    instances.emplace_back(build_olive(5),
                           algorithm2_color(PalmSpec{{1, 2, 3, 4, 5}}));
    instances.emplace_back(build_regular_palm(3, 1), Coloring({4, 1, 2, 3}));
    instances.emplace_back(Tree(3, {{0, 1}, {1, 2}}), Coloring({1, 2, 1}));
    for (const auto& [t, c] : instances) {
        bool base = verify(t, c).is_locating;
        std::vector<int> perm(c.k());
        std::iota(perm.begin(), perm.end(), 1);
        for (int round = 0; round < 20; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> relabeled(t.size());
            for (int v = 0; v < t.size(); ++v) relabeled[v] = perm[c.color(v) - 1];
            CHECK(verify(t, Coloring(relabeled)).is_locating == base);
        }
    }
}

TEST_CASE("chi_upper_witness certifies verified colorings only") {
    Tree p7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(chi_upper_witness(p7, path_coloring(p7)) == 3);

    Tree star = build_regular_palm(4, 1);
    CHECK(chi_upper_witness(star, palm_full_coloring(PalmSpec{{1, 1, 1, 1}})) == 5);

    auto [s42, c42] = sn2_coloring(4);
    CHECK(chi_upper_witness(s42, c42) == 3);

    Tree p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(chi_upper_witness(p3, Coloring({1, 2, 1})), VerificationError);
}

TEST_CASE("duplicate pair listing is capped but counted in full") {
    // a star colored with one color class for all leaves collides everywhere
    int n = 60;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    Tree star(n, std::move(edges));
    std::vector<int> colors(n, 2);
    colors[0] = 1;
    VerifyReport rep = verify(star, Coloring(colors));
    CHECK(rep.duplicate_count == static_cast<long long>(n - 1) * (n - 2) / 2);
    CHECK(rep.duplicate_pairs.size() == VerifyReport::kDuplicateCap);
}
