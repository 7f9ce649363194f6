#include <doctest.h>

#include <random>

#include "distblock/closed_forms.hpp"
#include "distblock/exact_linalg.hpp"
#include "distblock/spectral.hpp"
#include "distblock/sweep.hpp"

using namespace distblock;
using namespace distblock::spectral;

TEST_CASE("mu_single: hand values") {
    auto mu_k2 = mu_single(MultipartiteSpec({1, 1}));
    CHECK(mu_k2 == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    // K_{1,1,5}: gamma = -1; singletons get 3, the large part -1
    auto mu = mu_single(MultipartiteSpec({1, 1, 5}));
    CHECK(mu[0] == Rational(3));
    CHECK(mu[1] == Rational(3));
    for (int i = 2; i < 7; ++i) CHECK(mu[i] == Rational(-1));

    Rational total;
    for (const auto& v : mu) total += v;
    CHECK(total == Rational(1));

    CHECK_THROWS_AS(mu_single(MultipartiteSpec({1, 1, 4})), FormulaInapplicableError);
}

TEST_CASE("mu is a left eigen-like vector: mu' D = lambda 1'") {
    for (const auto& spec : sweep::compositions(12)) {
        if (forms::gamma(spec.parts) == 0) continue;
        auto mu = mu_single(spec);
        auto lambda = forms::lambda_closed(spec);
        auto muD = vec_mat(mu, graphs::build_multipartite(spec));
        for (const auto& v : muD) CHECK(v == lambda);
    }
}

TEST_CASE("lap_like_single: K_2 reproduces half the graph Laplacian") {
    ExactMatrix l = lap_like_single(MultipartiteSpec({1, 1}));
    ExactMatrix want(2, 2);
    want(0, 0) = Rational(1, 2);
    want(0, 1) = Rational(-1, 2);
    want(1, 0) = Rational(-1, 2);
    want(1, 1) = Rational(1, 2);
    CHECK(l == want);
}

TEST_CASE("Laplacian-like matrix: LD + I = mu 1' and row sums vanish") {
    for (auto parts : {std::vector<long>{1, 1, 3}, {2, 3}, {3, 4, 5}, {1, 2, 3, 4}}) {
        MultipartiteSpec spec(parts);
        ExactMatrix d = graphs::build_multipartite(spec);
        ExactMatrix l = lap_like_single(spec);
        auto mu = mu_single(spec);
        const std::size_t n = d.rows();

        for (std::size_t i = 0; i < n; ++i) {
            CHECK(l.row_sum(i).is_zero());
            CHECK(l.col_sum(i).is_zero());
        }
        std::vector<Rational> ones(n, Rational(1));
        CHECK(l * d + ExactMatrix::identity(n) == outer(mu, ones));
        CHECK(l.is_symmetric());
    }
}

TEST_CASE("lapexp_check: all eight conditions on single blocks up to 12 vertices") {
    auto rep = sweep::single_block_lapexp(12, sweep::Exec::serial);
    for (const auto& f : rep.failures) MESSAGE(f.item, ": ", f.detail);
    CHECK(rep.ok());
}

TEST_CASE("lapexp_check flags a broken triple") {
    MultipartiteSpec spec({1, 1, 3});
    ExactMatrix d = graphs::build_multipartite(spec);
    auto mu = mu_single(spec);
    auto l = lap_like_single(spec);
    auto good = lapexp_check(d, forms::lambda_closed(spec), mu, l);
    CHECK(good.all());

    auto bad = lapexp_check(d, forms::lambda_closed(spec) + Rational(1), mu, l);
    CHECK(!bad.muD_lambda);
    CHECK(!bad.Dmu_lambda);
    CHECK(bad.mu_sum_one);  // unrelated conditions keep passing

    mu[0] += Rational(1);
    auto bad2 = lapexp_check(d, forms::lambda_closed(spec), mu, l);
    CHECK(!bad2.mu_sum_one);
}

TEST_CASE("spectral_multiblock: path on 3 vertices") {
    auto g = graphs::tree_graph({{0, 1}, {1, 2}});
    auto data = spectral_multiblock(g);
    CHECK(data.lambda == Rational(1));
    CHECK(data.mu == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(1, 2)});

    auto d = graphs::bfs_distances(g);
    auto rep = lapexp_check(d, data.lambda, data.mu, data.lap_like);
    CHECK(rep.all());
}

TEST_CASE("spectral_multiblock: star of three T_7 blocks has lambda -6") {
    auto g = graphs::star_of_blocks(t_n(7), 3);
    CHECK(spectral_multiblock(g).lambda == Rational(-6));
}

TEST_CASE("spectral_multiblock rejects a zero-cofactor block") {
    auto g = graphs::star_graph({t_n(6), t_n(3)});
    CHECK_THROWS_WITH_AS(spectral_multiblock(g),
                         doctest::Contains("cof D = 0"), FormulaInapplicableError);
}

TEST_CASE("inverse_single_block: frozen examples and exact products") {
    // K_2 is self-inverse
    ExactMatrix k2(2, 2);
    k2(0, 1) = 1;
    k2(1, 0) = 1;
    CHECK(inverse_single_block(MultipartiteSpec({1, 1})) == k2);

    // K_{2,3}: the bipartite display with beta = 3 n1 n2 - 4(n1 + n2 - 1)
    {
        long n1 = 2, n2 = 3;
        MultipartiteSpec spec({n1, n2});
        ExactMatrix inv = inverse_single_block(spec);
        long denom = 3 * n1 * n2 - 4 * (n1 + n2 - 1);
        CHECK(inv(0, 0) == Rational(3 * n2 - 4, 2 * denom) - Rational(1, 2));
        CHECK(inv(0, 1) == Rational(3 * n2 - 4, 2 * denom));
        CHECK(inv(0, 2) == Rational(-1, denom));
        CHECK(inv(3, 4) == Rational(3 * n1 - 4, 2 * denom));
    }

    for (auto parts : {std::vector<long>{1, 1, 3}, {2, 3}, {3, 3, 3}, {1, 2, 5}}) {
        MultipartiteSpec spec(parts);
        ExactMatrix d = graphs::build_multipartite(spec);
        ExactMatrix inv = inverse_single_block(spec);
        CHECK(inv * d == ExactMatrix::identity(d.rows()));
        CHECK(inv == linalg::inverse(d));
    }

    CHECK_THROWS_AS(inverse_single_block(MultipartiteSpec({2, 2, 5})), SingularError);
}

TEST_CASE("single-block inverse sweep: block-form route and rank-one route") {
    auto rep = sweep::single_block_inverse(12, sweep::Exec::serial);
    for (const auto& f : rep.failures) MESSAGE(f.item, ": ", f.detail);
    CHECK(rep.ok());
}

TEST_CASE("a nonsingular block with zero cofactor still has the block inverse") {
    MultipartiteSpec spec({1, 1, 4});  // gamma = 0, beta = 2
    ExactMatrix d = graphs::build_multipartite(spec);
    ExactMatrix inv = inverse_single_block(spec);
    CHECK(inv * d == ExactMatrix::identity(6));
    CHECK_THROWS_AS(mu_single(spec), FormulaInapplicableError);
}

TEST_CASE("inverse_multiblock: trees recover the Laplacian + tau form") {
    std::mt19937_64 rng(2718);
    for (int n = 2; n <= 9; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            auto t = n == 2 ? graphs::tree_graph({{0, 1}})
                            : graphs::random_tree(rng, n);
            ExactMatrix d = graphs::bfs_distances(t);
            ExactMatrix inv = inverse_multiblock(t);
            CHECK(inv == linalg::inverse(d));

            // -L/2 + tau tau' / (2(n-1)), tau(v) = 2 - deg(v)
            ExactMatrix lap = graphs::graph_laplacian(t);
            std::vector<Rational> tau(n);
            for (int v = 0; v < n; ++v) tau[v] = Rational(2) - lap(v, v);
            ExactMatrix gl = Rational(-1, 2) * lap;
            gl += Rational(1, 2 * (n - 1)) * outer(tau, tau);
            CHECK(inv == gl);

            auto data = spectral_multiblock(t);
            CHECK(data.lambda == Rational(n - 1, 2));
            if (n == 2) break;
        }
    }
}

TEST_CASE("inverse_multiblock matches the oracle: small fixed graphs") {
    auto path4 = graphs::tree_graph({{0, 1}, {1, 2}, {2, 3}});
    CHECK(inverse_multiblock(path4) ==
          linalg::inverse(graphs::bfs_distances(path4)));

    graphs::MultiBlockGraph tri;
    tri.vertex_count = 4;
    tri.blocks.push_back(graphs::BlockPlacement{{{0}, {1}, {2}}});
    tri.blocks.push_back(graphs::BlockPlacement{{{2}, {3}}});
    CHECK(inverse_multiblock(tri) == linalg::inverse(graphs::bfs_distances(tri)));
}

TEST_CASE("rank_one_obstruction: cof = 0 iff 1' D^{-1} 1 = 0") {
    // K_3: cof = 3, no obstruction
    CHECK(!rank_one_obstruction(graphs::build_multipartite(MultipartiteSpec({1, 1, 1}))));
    // path on 3: cof = 4
    CHECK(!rank_one_obstruction(graphs::bfs_distances(graphs::tree_graph({{0, 1}, {1, 2}}))));
    // K_{1,1,4} alone: cof = 0, det = 32 != 0
    CHECK(rank_one_obstruction(graphs::build_multipartite(MultipartiteSpec({1, 1, 4}))));

    ExactMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 1;
    singular(1, 0) = 1;
    singular(1, 1) = 1;
    CHECK_THROWS_AS(rank_one_obstruction(singular), SingularError);
}
