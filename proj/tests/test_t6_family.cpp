#include <doctest.h>

#include "distblock/exact_linalg.hpp"
#include "distblock/spectral.hpp"
#include "distblock/t6_family.hpp"

using namespace distblock;
using namespace distblock::t6family;

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(T6TnSpec(6, 1), InvalidSpecError);
    CHECK_THROWS_AS(T6TnSpec(7, 0), InvalidSpecError);
    CHECK_THROWS_AS(T6TnSpec(2, 1), InvalidSpecError);
    CHECK(T6TnSpec(3, 2).vertex_count() == 10);
    CHECK(T6TnSpec(7, 1).vertex_count() == 12);
}

TEST_CASE("build_t6_tn: distance blocks match the BFS oracle") {
    for (long n : {3L, 4L, 5L, 7L, 9L}) {
        for (long b : {1L, 2L, 3L}) {
            T6TnSpec spec(n, b);
            auto m = build_t6_tn(spec);
            CHECK(m.d == graphs::bfs_distances(as_graph(spec)));
            CHECK(m.l == graphs::graph_laplacian(as_graph(spec)));
        }
    }
}

TEST_CASE("center row: 1 against base vertices, 2 against large-part vertices") {
    T6TnSpec spec(7, 2);
    auto m = build_t6_tn(spec);
    const std::size_t center = 17;  // 6 + 2*6 - 1
    CHECK(m.d(center, 0) == Rational(1));
    CHECK(m.d(center, 1) == Rational(1));
    CHECK(m.d(center, 2) == Rational(2));
    CHECK(m.d(center, 5) == Rational(1));   // first T_n base
    CHECK(m.d(center, 7) == Rational(2));   // first T_n large
    CHECK(m.d(center, center) == Rational(0));
}

TEST_CASE("n = 3 degenerates cleanly (empty large-part sub-blocks)") {
    T6TnSpec spec(3, 2);
    auto m = build_t6_tn(spec);
    CHECK(m.d.rows() == 10);
    CHECK(m.d == graphs::bfs_distances(as_graph(spec)));
    CHECK(inverse_t6_tn(spec) * m.d == ExactMatrix::identity(10));
}

TEST_CASE("det_t6_tn: closed values") {
    CHECK(det_t6_tn(T6TnSpec(7, 1)) == 256);    // (-1)^8 2^8 1
    CHECK(det_t6_tn(T6TnSpec(3, 1)) == -48);    // (-1)^4 2^4 (-3)
    CHECK(det_t6_tn(T6TnSpec(5, 2)) == -256);   // (-1)^11 2^8 (-1)^2
}

TEST_CASE("determinant and inverse over the verification grid") {
    for (long n : {3L, 4L, 5L, 7L, 8L, 9L, 10L}) {
        for (long b : {1L, 2L, 3L}) {
            T6TnSpec spec(n, b);
            auto m = build_t6_tn(spec);
            CHECK(Rational(det_t6_tn(spec)) == linalg::determinant(m.d));

            ExactMatrix c = inverse_t6_tn(spec);
            const std::size_t size = m.d.rows();
            CHECK(m.d * c == ExactMatrix::identity(size));
            CHECK(c * m.d == ExactMatrix::identity(size));
        }
    }
}

TEST_CASE("verify_steps: all ten proof-step identities hold") {
    for (long n : {3L, 4L, 5L, 7L, 8L, 9L, 10L})
        for (long b : {1L, 2L, 3L}) {
            auto rep = verify_steps(T6TnSpec(n, b));
            for (const auto& f : rep.failures) MESSAGE("n=", n, " b=", b, ": ", f);
            CHECK(rep.all());
        }
}

TEST_CASE("the family realizes the rank-one obstruction") {
    for (long n : {3L, 7L, 9L}) {
        T6TnSpec spec(n, 2);
        auto m = build_t6_tn(spec);
        // cof D = 0 (the T_6 block kills the product) yet det != 0
        CHECK(linalg::cofactor_sum(m.d).is_zero());
        CHECK(!linalg::determinant(m.d).is_zero());
        CHECK(spectral::rank_one_obstruction(m.d));
    }
}

TEST_CASE("detect: recognizes the family and bridges vertex orders") {
    T6TnSpec spec(7, 2);
    auto g = as_graph(spec);
    auto found = detect(g);
    REQUIRE(found.has_value());
    CHECK(found->spec.n == 7);
    CHECK(found->spec.b == 2);
    CHECK(inverse_in_graph_order(*found) ==
          linalg::inverse(graphs::bfs_distances(g)));

    // same graph with shuffled block order and relabeled vertices
    graphs::MultiBlockGraph shuffled;
    shuffled.vertex_count = g.vertex_count;
    std::vector<graphs::VertexId> relabel(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v)
        relabel[v] = (v * 7 + 3) % g.vertex_count;
    for (auto it = g.blocks.rbegin(); it != g.blocks.rend(); ++it) {
        graphs::BlockPlacement blk;
        for (const auto& part : it->parts) {
            std::vector<graphs::VertexId> ids;
            for (auto v : part) ids.push_back(relabel[v]);
            blk.parts.push_back(std::move(ids));
        }
        shuffled.blocks.push_back(std::move(blk));
    }
    auto found2 = detect(shuffled);
    REQUIRE(found2.has_value());
    CHECK(found2->spec.n == 7);
    CHECK(inverse_in_graph_order(*found2) ==
          linalg::inverse(graphs::bfs_distances(shuffled)));
}

TEST_CASE("detect rejects near misses") {
    // hub at a base vertex: T_7 blocks sharing a singleton-part vertex
    auto base_glued = graphs::star_graph({t_n(6), t_n(7)}, {0, 0});
    CHECK(!detect(base_glued).has_value());

    // no T_6 block
    CHECK(!detect(graphs::star_graph({t_n(7), t_n(7)}, {2, 2})).has_value());

    // mixed tail sizes
    auto mixed = graphs::star_graph({t_n(6), t_n(7), t_n(8)}, {2, 2, 2});
    CHECK(!detect(mixed).has_value());

    // plain tree
    CHECK(!detect(graphs::tree_graph({{0, 1}, {1, 2}})).has_value());
}

TEST_CASE("detect accepts star_graph-built instances") {
    auto g = graphs::star_graph({t_n(6), t_n(9), t_n(9)}, {2, 2, 2});
    auto found = detect(g);
    REQUIRE(found.has_value());
    CHECK(found->spec.n == 9);
    CHECK(found->spec.b == 2);
}

TEST_CASE("rank-one inverse refuses the family and points at the R-matrix route") {
    auto g = as_graph(T6TnSpec(7, 1));
    CHECK_THROWS_WITH_AS(spectral::inverse_multiblock(g),
                         doctest::Contains("R-matrix"), FormulaInapplicableError);
}
