#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "locchroma/constructions.hpp"
#include "locchroma/io.hpp"
#include "locchroma/random_tree.hpp"

using namespace locchroma;

TEST_CASE("tree files are exact and round-trip bitwise") {
    Tree p3(3, {{0, 1}, {1, 2}});
    CHECK(format_tree(p3) == "tree 3\n0 1\n1 2\n");

    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        Tree t = random_tree(2 + static_cast<int>(rng() % 30), rng);
        std::string text = format_tree(t);
        std::istringstream in(text);
        Tree back = parse_tree(in, "roundtrip");
        CHECK(back == t);
        CHECK(format_tree(back) == text);
    }
}

TEST_CASE("tree parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::istringstream in(text);
        try {
            parse_tree(in, "bad");
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("graph 3\n0 1\n1 2\n", "bad:1");
    expect_error("tree x\n", "bad:1");
    expect_error("tree 3\n0 1\n", "bad:2");
    expect_error("tree 3\n0 1\n2 1\n", "bad:3");         // u < v violated
    expect_error("tree 3\n1 2\n0 1\n", "bad:3");         // unsorted
    expect_error("tree 3\n0 1\n0 3\n", "bad:3");         // out of range
    expect_error("tree 3\n0 1\n0 1\n", "bad:3");         // duplicate edge
    expect_error("tree 2\n0 1 2\n", "bad:2");
}

TEST_CASE("coloring files are exact and strict") {
    Coloring c({2, 1, 2});
    CHECK(format_coloring(c) == "coloring 3 2\n0 2\n1 1\n2 2\n");

    std::istringstream good("coloring 3 2\n0 2\n1 1\n2 2\n");
    CHECK(parse_coloring(good, "good") == c);

    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::istringstream in(text);
        try {
            parse_coloring(in, "bad");
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("coloring 2 2\n1 1\n0 2\n", "bad:2");   // out of order
    expect_error("coloring 2 2\n0 1\n1 3\n", "bad:3");   // color out of range
    expect_error("coloring 2 2\n0 1\n1 1\n", "bad:3");   // color 2 never used
    expect_error("coloring 2\n0 1\n1 2\n", "bad:1");
}

TEST_CASE("coloring round-trips bitwise") {
    std::mt19937_64 rng(2102);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 40);
        std::vector<int> colors(n);
        for (int& v : colors) v = 1 + static_cast<int>(rng() % 6);
        Coloring c(colors);
        std::string text = format_coloring(c);
        std::istringstream in(text);
        CHECK(parse_coloring(in, "roundtrip") == c);
    }
}

TEST_CASE("palm spec lines") {
    std::istringstream in("palm 1,2,3\n");
    PalmSpec spec = parse_palm_spec(in, "spec");
    CHECK(spec.arms == std::vector<int>{1, 2, 3});
    CHECK(format_palm_spec(spec) == "palm 1,2,3\n");

    std::istringstream bad("palm 1,0,3\n");
    CHECK_THROWS_AS(parse_palm_spec(bad, "spec"), ParseError);
}

TEST_CASE("a tree block followed by a coloring block parses as a bundle") {
    Tree t = build_regular_palm(3, 1);
    Coloring c({4, 1, 2, 3});
    std::string text = format_tree(t) + format_coloring(c);
    std::istringstream in(text);
    LineReader reader(in, "bundle");
    Tree t2 = parse_tree(reader);
    CHECK(reader.has_more_content());
    Coloring c2 = parse_coloring(reader);
    CHECK(t2 == t);
    CHECK(c2 == c);
    CHECK_FALSE(reader.has_more_content());
}

TEST_CASE("dot export is sorted and labels colors") {
    Tree p3(3, {{0, 1}, {1, 2}});
    CHECK(to_dot(p3) ==
          "graph tree {\n  node [shape=circle];\n  0;\n  1;\n  2;\n"
          "  0 -- 1;\n  1 -- 2;\n}\n");
    Coloring c({1, 2, 1});
    std::string dot = to_dot(p3, &c);
    CHECK(dot.find("0 [label=\"1\"];") != std::string::npos);
    CHECK(dot.find("1 [label=\"2\"];") != std::string::npos);
}
