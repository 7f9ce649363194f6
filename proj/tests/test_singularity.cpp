#include <doctest.h>

#include <set>

#include "distblock/closed_forms.hpp"
#include "distblock/exact_linalg.hpp"
#include "distblock/singularity.hpp"
#include "distblock/spectral.hpp"
#include "distblock/sweep.hpp"

using namespace distblock;
using namespace distblock::singularity;

TEST_CASE("classify_det: the two vanishing cases") {
    auto v1 = classify_det(MultipartiteSpec({2, 2, 7}));
    CHECK(v1.zero);
    CHECK(v1.which == SingularCase::two_twos);

    CHECK(!classify_det(MultipartiteSpec({1, 1, 5})).zero);

    // m=9, l=5: reciprocal sum 4 but target 0 -> nonsingular
    CHECK(!classify_det(MultipartiteSpec({1, 1, 1, 1, 1, 4, 4, 4, 4})).zero);

    // m=11, l=7: sum 2 = 2l-(m+1) -> singular, case 2
    auto v2 = classify_det(MultipartiteSpec({1, 1, 1, 1, 1, 1, 1, 6, 6, 6, 6}));
    CHECK(v2.zero);
    CHECK(v2.which == SingularCase::reciprocal_equality);
    REQUIRE(v2.l.has_value());
    CHECK(*v2.l == 7);
    CHECK(v2.l_bound_ok);

    // permutation-invariance
    CHECK(classify_det(MultipartiteSpec({6, 1, 6, 1, 1, 6, 1, 1, 6, 1, 1})).zero);
}

TEST_CASE("classify_cof: frozen examples") {
    auto v = classify_cof(MultipartiteSpec({1, 1, 4}));
    CHECK(v.zero);
    CHECK(v.which == SingularCase::reciprocal_equality);
    CHECK(*v.l == 2);

    CHECK(classify_cof(MultipartiteSpec({1, 1, 1, 1, 8, 8, 8})).zero);  // l=4, m=7
    CHECK(!classify_cof(MultipartiteSpec({1, 1, 5})).zero);
    CHECK(classify_cof(MultipartiteSpec({2, 2, 9})).zero);
}

TEST_CASE("verdicts match the oracle exhaustively up to 14 vertices") {
    auto rep = sweep::singularity_agreement(14, sweep::Exec::serial);
    CHECK(rep.checked > 400);
    for (const auto& f : rep.failures) MESSAGE(f.item, ": ", f.detail);
    CHECK(rep.ok());
}

TEST_CASE("lambda_single: values and the 1 + 1/f form") {
    auto t7 = lambda_single(t_n(7));
    CHECK(t7.lambda == Rational(-2));
    CHECK(t7.sign == Sign::negative);

    auto one_two = lambda_single(MultipartiteSpec({2, 3}));
    CHECK(one_two.lambda == Rational(1));  // exactly one part equal 2
    CHECK(!one_two.f.has_value());

    auto k4 = lambda_single(MultipartiteSpec({1, 1, 1, 1}));
    CHECK(k4.lambda == Rational(3, 4));
    REQUIRE(k4.f.has_value());
    CHECK(k4.lambda == Rational(1) + k4.f->reciprocal());

    CHECK_THROWS_AS(lambda_single(MultipartiteSpec({1, 1, 4})),
                    FormulaInapplicableError);
    CHECK_THROWS_AS(lambda_single(MultipartiteSpec({2, 2, 3})),
                    FormulaInapplicableError);
}

TEST_CASE("lambda of T_n is -2/(n-6)") {
    for (long n : {3L, 4L, 5L, 7L, 8L, 9L, 10L, 11L, 12L})
        CHECK(lambda_single(t_n(n)).lambda == Rational(-2, n - 6));
}

namespace {

std::set<std::vector<long>> as_set(const std::vector<MultipartiteSpec>& specs) {
    std::set<std::vector<long>> out;
    for (const auto& s : specs) out.insert(s.parts);
    return out;
}

}  // namespace

TEST_CASE("negative_lambda_classifier reproduces the m <= 5 classification") {
    CHECK(negative_lambda_classifier(2, 12).empty());
    CHECK(negative_lambda_classifier(4, 12).empty());

    std::set<std::vector<long>> want3;
    for (long n3 = 5; n3 <= 7; ++n3) want3.insert({1, 1, n3});
    CHECK(as_set(negative_lambda_classifier(3, 7)) == want3);

    auto got5 = as_set(negative_lambda_classifier(5, 10));
    CHECK(got5.contains({1, 1, 1, 5, 9}));
    CHECK(!got5.contains({1, 1, 1, 5, 8}));
    for (const auto& parts : got5) {
        CHECK(parts[0] == 1);
        CHECK(parts[1] == 1);
        CHECK(parts[2] == 1);
        CHECK(parts[3] >= 5);
        // n5 > 4 + 4/(n4-4) as an exact inequality
        CHECK(Rational(parts[4]) > Rational(4) + Rational(4, parts[3] - 4));
    }
}

TEST_CASE("classifier agrees with brute-force sign over the enumeration") {
    for (int m = 2; m <= 4; ++m) {
        auto got = as_set(negative_lambda_classifier(m, 8));
        for (const auto& spec : sweep::compositions(8 * m, 2, 8, m)) {
            Int g = forms::gamma(spec.parts);
            bool neg = g != 0 && sgn(forms::beta(spec.parts)) * sgn(g) < 0;
            CHECK(got.contains(spec.parts) == neg);
        }
    }
}

TEST_CASE("negative_lambda_family: admissible cases and validity") {
    CHECK(admissible_family_cases(4).empty());
    CHECK(admissible_family_cases(5) == std::vector<int>{1});
    CHECK(admissible_family_cases(6) == std::vector<int>{2});
    CHECK(admissible_family_cases(7) == std::vector<int>{2, 3});
    CHECK(admissible_family_cases(8) == std::vector<int>{1});
    CHECK(admissible_family_cases(9) == std::vector<int>{1, 2});

    CHECK_THROWS_AS(negative_lambda_family(8, 2, 0), InvalidSpecError);
    CHECK_THROWS_AS(negative_lambda_family(4, 1, 0), InvalidSpecError);

    for (int m = 5; m <= 9; ++m)
        for (int k : admissible_family_cases(m)) {
            std::set<std::vector<long>> distinct;
            for (long seed = 0; seed < 10; ++seed) {
                auto spec = negative_lambda_family(m, k, seed);
                CHECK(spec.part_count() == static_cast<std::size_t>(m));
                CHECK(lambda_single(spec).sign == Sign::negative);
                distinct.insert(spec.sorted().parts);
            }
            CHECK(distinct.size() == 10);
        }
}

TEST_CASE("zero-lambda families: exact lambda 0 with nonzero block cofactors") {
    // one T_3 balanced by one T_9 block
    auto g = zero_lambda_ex47(1, 1, 0, 1, 0, 1);
    auto data_lambda = [](const graphs::MultiBlockGraph& gr) {
        Rational total;
        for (const auto& blk : gr.blocks) total += forms::lambda_closed(blk.spec());
        return total;
    };
    CHECK(data_lambda(g).is_zero());
    CHECK(g.blocks.size() == 2);

    auto g48 = zero_lambda_ex48(1);  // K_4 + K_{1,1} + 5 blocks of T_14
    CHECK(g48.blocks.size() == 7);
    CHECK(data_lambda(g48).is_zero());
    for (const auto& blk : g48.blocks)
        CHECK(forms::cof_closed(blk.spec()) != 0);

    // det of the assembled matrix is 0 while every block cofactor is nonzero
    ExactMatrix d = graphs::bfs_distances(g48);
    CHECK(linalg::determinant(d).is_zero());
    CHECK_THROWS_AS(spectral::inverse_multiblock(g48), SingularError);

    CHECK_THROWS_AS(zero_lambda_ex48(2), InvalidSpecError);
    CHECK_THROWS_AS(zero_lambda_ex47(0, 1, 0, 1, 0, 1), InvalidSpecError);
}

TEST_CASE("mixed zero-lambda construction with all three balancing shapes") {
    auto g = zero_lambda_ex47(2, 3, 1, 2, 1, 4);
    CHECK(g.blocks.size() == 2 * 4 + 3 + 5);
    Rational lambda;
    for (const auto& blk : g.blocks) lambda += forms::lambda_closed(blk.spec());
    CHECK(lambda.is_zero());
    CHECK(linalg::determinant(graphs::bfs_distances(g)).is_zero());
}
