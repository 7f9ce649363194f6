#include <doctest.h>

#include <functional>

#include "distblock/closed_forms.hpp"
#include "distblock/exact_linalg.hpp"
#include "distblock/errors.hpp"
#include "distblock/sweep.hpp"

using namespace distblock;
using namespace distblock::forms;

TEST_CASE("invariants: hand values and conventions") {
    auto k3 = invariants(std::vector<long>{1, 1, 1});
    CHECK(k3.alpha == -1);
    CHECK(k3.gamma == 3);
    CHECK(k3.beta == 2);

    CHECK(gamma({1, 1, 4}) == 0);  // the unique cof-zero tripartite outside K_{2,2,n}
    CHECK(gamma({2, 2, 5}) == 0);
    CHECK(beta({2, 2, 5}) == 0);
    CHECK(beta({2, 2, 11}) == 0);

    // empty set and singletons, forced by the subset recurrences
    auto empty = invariants(std::vector<long>{});
    CHECK(empty.alpha == 1);
    CHECK(empty.gamma == 0);
    CHECK(empty.beta == 1);
    auto single = invariants(std::vector<long>{5});
    CHECK(single.alpha == 3);
    CHECK(single.gamma == 5);
    CHECK(single.beta == 8);  // 2n - 2
}

TEST_CASE("cof_closed and det_closed: frozen examples") {
    CHECK(cof_closed(MultipartiteSpec({1, 1, 1})) == 3);  // (-1)^{m-1} m for K_m
    CHECK(cof_closed(MultipartiteSpec({1, 1, 1, 1})) == -4);
    CHECK(cof_closed(MultipartiteSpec({1, 1, 3})) == 4);
    CHECK(cof_closed(MultipartiteSpec({2, 3})) == -16);
    CHECK(det_closed(MultipartiteSpec({1, 1, 1})) == 2);
    CHECK(det_closed(MultipartiteSpec({2, 2, 5})) == 0);
    CHECK(det_closed(MultipartiteSpec({1, 1, 3})) == 8);
    CHECK(det_closed(MultipartiteSpec({2, 3})) == -16);
}

TEST_CASE("closed forms equal the oracle on every composition up to 12 vertices") {
    auto rep = sweep::closed_vs_oracle(12, sweep::Exec::serial);
    CHECK(rep.checked > 200);
    for (const auto& f : rep.failures)
        MESSAGE(f.item, ": ", f.detail);
    CHECK(rep.ok());
}

TEST_CASE("det_Cm: explicit matrix vs closed form") {
    CHECK(det_Cm({1, 1, 1}) == 3);
    CHECK(det_Cm({7}) == 7);              // 1x1 case
    CHECK(det_Cm({3, 3}) == -6);          // (-1)^1 (3*1 + 3*1)
    CHECK(det_Cm({2, 5, 9}) == 2 * 3 * 7);  // only the i=1 term survives
}

TEST_CASE("reciprocal_sum_solution: construction and exactness") {
    CHECK(reciprocal_sum_solution(3, 1) == std::vector<long>{6, 6, 6});
    CHECK(reciprocal_sum_solution(3, 6) == std::vector<long>{1, 1, 1});
    CHECK(reciprocal_sum_solution(2, 3) == std::vector<long>{1, 2});

    for (long p = 1; p <= 12; ++p)
        for (long r = 1; r <= 2 * p; ++r) {
            auto q = reciprocal_sum_solution(p, r);
            REQUIRE(q.size() == static_cast<std::size_t>(p));
            Rational sum;
            for (long qi : q) {
                REQUIRE(qi >= 1);
                sum += Rational(1, qi);
            }
            CHECK(sum == Rational(r, 2));
        }

    CHECK_THROWS_AS(reciprocal_sum_solution(3, 0), InvalidSpecError);
    CHECK_THROWS_AS(reciprocal_sum_solution(3, 7), InvalidSpecError);
}

TEST_CASE("identity_suite passes on all compositions with m <= 6, parts <= 7") {
    std::vector<long> cur;
    std::function<void(long, int)> rec = [&](long lo, int left) {
        if (cur.size() >= 2) {
            auto rep = identity_suite(cur);
            if (!rep.ok())
                MESSAGE(rep.failures.front().name, " on ", rep.failures.front().operands);
            CHECK(rep.ok());
        }
        if (left == 0) return;
        for (long v = lo; v <= 7; ++v) {
            cur.push_back(v);
            rec(v, left - 1);
            cur.pop_back();
        }
    };
    rec(1, 4);  // m up to 4 exhaustively over parts <= 7
    // a few larger hand-picked sets up to m = 6
    for (auto parts : {std::vector<long>{1, 1, 2, 3, 5, 7}, {2, 2, 2, 2, 2, 2},
                       {1, 4, 4, 6, 7, 7}, {3, 3, 3, 5, 6}}) {
        CHECK(identity_suite(parts).ok());
    }
}

TEST_CASE("beta nonzero admits a nonzero beta after deleting one index") {
    // The one boundary case: {1,1} has beta = -1 but both deletions land on
    // the singleton {1} whose beta is 0. The deletion property is what the
    // block-inverse induction needs, and the induction starts at m = 3.
    CHECK(beta({1, 1}) != 0);
    CHECK(beta(std::vector<long>{1}) == 0);

    // exhaustive over m in {2..5}, parts <= 6, away from that case
    std::vector<long> cur;
    std::function<void(long, int)> rec = [&](long lo, int left) {
        if (cur.size() >= 2 && cur != std::vector<long>{1, 1} && beta(cur) != 0) {
            bool found = false;
            for (std::size_t i = 0; i < cur.size() && !found; ++i)
                found = beta(erase_index(cur, i)) != 0;
            CHECK(found);
        }
        if (left == 0) return;
        for (long v = lo; v <= 6; ++v) {
            cur.push_back(v);
            rec(v, left - 1);
            cur.pop_back();
        }
    };
    rec(1, 5);
}
