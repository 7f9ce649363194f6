#include <doctest.h>

#include <random>

#include "distblock/serialization.hpp"
#include "helpers.hpp"

using namespace distblock;
using namespace distblock::jsonio;

TEST_CASE("matrix JSON round-trip is exact") {
    std::mt19937_64 rng(8);
    ExactMatrix m = testutil::random_rational_matrix(rng, 5);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    // zero-dimension matrices survive too
    ExactMatrix empty(0, 0);
    CHECK(matrix_from_json(matrix_to_json(empty)) == empty);
}

TEST_CASE("rational JSON accepts strings, integers, and decimals") {
    CHECK(rational_from_json(json("3/4")) == Rational(3, 4));
    CHECK(rational_from_json(json(-7)) == Rational(-7));
    CHECK(rational_from_json(json("2.5")) == Rational(5, 2));
    CHECK_THROWS_AS(rational_from_json(json(nullptr)), InvalidSpecError);
}

TEST_CASE("graph JSON round-trip") {
    auto g = graphs::star_of_blocks(MultipartiteSpec({1, 1, 3}), 2);
    auto j = graph_to_json(g);
    auto back = graph_from_json(j);
    CHECK(back.vertex_count == g.vertex_count);
    REQUIRE(back.blocks.size() == g.blocks.size());
    for (std::size_t t = 0; t < g.blocks.size(); ++t)
        CHECK(back.blocks[t].parts == g.blocks[t].parts);
}

TEST_CASE("graph JSON rejects invalid structures") {
    json bad = {{"vertex_count", 3},
                {"blocks", json::array({{{"parts", {{0}, {1}}}},
                                        {{"parts", {{0}, {1}}}}})}};
    // vertex 2 unused and duplicate block pair sharing 2 vertices
    CHECK_THROWS_AS(graph_from_json(bad), InvalidSpecError);
    CHECK_THROWS_AS(graph_from_json(json{{"vertex_count", 2}}), InvalidSpecError);
}

TEST_CASE("parse_graph_argument: shortcuts and bare compositions") {
    auto tree = parse_graph_argument("tree:0-1,1-2,2-3");
    CHECK(tree.vertex_count == 4);
    CHECK(tree.blocks.size() == 3);

    auto star = parse_graph_argument("star_of_blocks:1,1,5x3");
    CHECK(star.blocks.size() == 3);
    CHECK(star.vertex_count == 1 + 3 * 6);

    auto t6 = parse_graph_argument("t6_tn:7,2");
    CHECK(t6.vertex_count == 18);
    CHECK(t6.blocks.size() == 3);

    auto block = parse_graph_argument("2,3");
    CHECK(block.vertex_count == 5);
    CHECK(block.blocks.size() == 1);

    auto inline_json = parse_graph_argument(
        R"({"vertex_count": 2, "blocks": [{"parts": [[0], [1]]}]})");
    CHECK(inline_json.vertex_count == 2);

    CHECK_THROWS_AS(parse_graph_argument("tree:0-0"), InvalidSpecError);
    CHECK_THROWS_AS(parse_graph_argument("t6_tn:6,1"), InvalidSpecError);
    CHECK_THROWS_AS(parse_graph_argument("bogus spec"), InvalidSpecError);
    CHECK_THROWS_AS(parse_graph_argument("{not json"), InvalidSpecError);
}

TEST_CASE("digest is stable") {
    CHECK(digest("abc") == digest("abc"));
    CHECK(digest("abc") != digest("abd"));
}
