#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "locchroma/random_tree.hpp"
#include "locchroma/report.hpp"

using namespace locchroma;

TEST_CASE("bounds report on the Delta=36 regular palm") {
    BoundsReport r = bounds_report(build_regular_palm(36, 6));
    CHECK(r.delta == 36);
    CHECK(r.delta_lb == 5);
    CHECK(r.leaves == 36);
    CHECK(r.beta == 1);
    CHECK(r.b == 1);
    REQUIRE(r.palm_sum.has_value());
    CHECK(*r.palm_sum == 5);  // 2 - 2 + algorithm-2 witness
    CHECK(r.bound_l_beta == 37);
    CHECK(r.chartrand_value == 32);
}

TEST_CASE("bounds report on a star") {
    BoundsReport r = bounds_report(build_regular_palm(4, 1), WitnessSource::exact);
    CHECK(r.leaves == 4);
    CHECK(r.beta == 1);
    CHECK(r.b == 1);
    CHECK(r.bound_l_beta == 5);
    CHECK(r.bound_l_b == 5);
    REQUIRE(r.palm_sum.has_value());
    CHECK(*r.palm_sum == 5);
    CHECK(r.palm_witnesses.size() == 1);
    CHECK(r.palm_witnesses[0].method == "exact");
}

TEST_CASE("bounds report on a path omits the palm sum") {
    Tree p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    BoundsReport r = bounds_report(p5);
    CHECK_FALSE(r.palm_sum.has_value());
    CHECK(r.leaves == 2);
    CHECK(r.beta == 0);
    CHECK(r.b == 0);
    CHECK(r.bound_l_b == 4);
    CHECK_FALSE(r.chartrand_value.has_value());  // delta_lb is 3 for paths
}

TEST_CASE("bound chain holds on random trees with both witness sources") {
    std::mt19937_64 rng(39916801);
    int done = 0;
    while (done < 50) {
        int n = 4 + static_cast<int>(rng() % 15);
        Tree t = random_tree(n, rng);
        if (t.is_path()) continue;
        ++done;
        BoundsReport r = bounds_report(t);  // asserts the chain internally
        REQUIRE(r.palm_sum.has_value());
        CHECK(*r.palm_sum <= r.bound_l_beta);
        CHECK(r.bound_l_beta <= r.bound_l_b);
        if (t.size() <= 12) {
            BoundsReport ex = bounds_report(t, WitnessSource::exact);
            CHECK(*ex.palm_sum <= *r.palm_sum);
        }
    }
}

TEST_CASE("bounds report text formats") {
    BoundsReport r = bounds_report(build_regular_palm(4, 1));
    std::string text = format_bounds_text(r);
    CHECK(text.find("max degree          4") != std::string::npos);
    std::string porcelain = format_bounds_porcelain(r);
    CHECK(porcelain.find("delta=4\n") != std::string::npos);
    CHECK(porcelain.find("palm_sum=5\n") != std::string::npos);
    CHECK(porcelain.find("chartrand_status=superseded\n") != std::string::npos);
}

TEST_CASE("chartrand entry is present exactly when delta needs three colors") {
    BoundsReport fig = bounds_report(build_regular_palm(36, 6));
    REQUIRE(fig.chartrand_value.has_value());
    CHECK(*fig.chartrand_value == 32);
    CHECK(fig.delta == 36);
    CHECK(fig.delta > *fig.chartrand_value);  // the counterexample in numbers
}
