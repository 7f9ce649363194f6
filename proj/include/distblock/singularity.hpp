#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distblock/graph.hpp"
#include "distblock/multipartite.hpp"
#include "distblock/rational.hpp"

namespace distblock::singularity {

enum class SingularCase {
    nonsingular,
    two_twos,             // at least two parts equal 2
    reciprocal_equality,  // l ones then parts > 2 hitting the exact reciprocal sum
};

/// Verdict for one of the two vanishing characterizations (det or cof).
struct Verdict {
    bool zero = false;
    SingularCase which = SingularCase::nonsingular;
    /// Case-2 witness: number of leading ones and the > 2 tail (sorted spec).
    std::optional<long> l;
    std::vector<long> tail;
    /// Case-2 verdicts must land inside the characterization's l-range.
    bool l_bound_ok = true;

    std::string case_name() const;
};

struct SingularityVerdict {
    Verdict det;
    Verdict cof;
};

/// det D = 0 iff two parts equal 2, or the sorted spec is l ones followed by
/// parts > 2 with 2 sum 1/(n_i - 2) = 2l - (m+1) (and then
/// (m+1)/2 < l <= (3m+1)/4 holds).
Verdict classify_det(const MultipartiteSpec& spec);

/// cof D = 0 iff two parts equal 2, or the reciprocal sum equals 2l - m
/// (and then m/2 < l <= 3m/4 holds).
Verdict classify_cof(const MultipartiteSpec& spec);

SingularityVerdict classify(const MultipartiteSpec& spec);

enum class Sign { negative, zero, positive };

struct LambdaSignReport {
    Rational lambda;
    Sign sign = Sign::zero;
    /// f = sum n_i/(n_i-2), reported when no part equals 2; then
    /// lambda = 1 + 1/f.
    std::optional<Rational> f;
};

/// lambda = det/cof = beta/gamma for a single block; requires cof != 0.
LambdaSignReport lambda_single(const MultipartiteSpec& spec);

/// All sorted compositions with m parts, each part <= budget, cof != 0 and
/// lambda < 0. Exactly the sets of the m <= 5 classification when m <= 5.
std::vector<MultipartiteSpec> negative_lambda_classifier(int m, long budget);

/// Admissible case indices k for the constructive negative-lambda family at
/// a given m >= 5 (empty otherwise).
std::vector<int> admissible_family_cases(int m);

/// Concrete negative-lambda composition for case k of the residue table,
/// built from the constructive reciprocal-interval solutions. Distinct seeds
/// (>= 0) give distinct compositions; every output has cof != 0 and
/// lambda < 0, which the function re-checks exactly before returning.
MultipartiteSpec negative_lambda_family(int m, int k, long seed);

/// Multi-block graphs with lambda_G = 0 built from T_n blocks: b1 copies of
/// T_3 each balanced by x blocks of T_{3x+6}, b2 copies of T_4 balanced by y
/// blocks of T_{2y+6}, b3 copies of T_5 balanced by z blocks of T_{z+6},
/// all sharing one hub vertex.
graphs::MultiBlockGraph zero_lambda_ex47(int b1, long x, int b2, long y, int b3, long z);

/// lambda_G = 0 family: K_4 + K_{m,m} + (9m-4) blocks of T_{6+8m} on a
/// common hub, for m in N \ {2}.
graphs::MultiBlockGraph zero_lambda_ex48(long m);

}  // namespace distblock::singularity
