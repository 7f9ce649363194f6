#pragma once

#include <string>
#include <vector>

#include "distblock/multipartite.hpp"
#include "distblock/rational.hpp"

namespace distblock::forms {

/// The integer invariants of an index multiset {n_1, ..., n_m}:
///   alpha = prod (n_i - 2)
///   gamma = sum_i n_i prod_{j != i} (n_j - 2)
///   beta  = gamma + alpha
/// The empty set has alpha = 1, gamma = 0, beta = 1, which makes the
/// subset recurrences hold verbatim down to singletons.
struct AlgebraicInvariants {
    Int alpha, beta, gamma;
    std::vector<long> indices;
};

AlgebraicInvariants invariants(const std::vector<long>& indices);
inline AlgebraicInvariants invariants(const MultipartiteSpec& spec) {
    return invariants(spec.parts);
}

Int alpha(const std::vector<long>& indices);
Int beta(const std::vector<long>& indices);
Int gamma(const std::vector<long>& indices);

/// The index multiset with position `i` removed (hatted invariants).
std::vector<long> erase_index(const std::vector<long>& indices, std::size_t i);
/// With positions `i` and `j` removed, i != j.
std::vector<long> erase_pair(const std::vector<long>& indices, std::size_t i, std::size_t j);

/// cof D(K_{n_1..n_m}) = (-2)^{|V|-m} * gamma.
Int cof_closed(const MultipartiteSpec& spec);
/// det D(K_{n_1..n_m}) = (-2)^{|V|-m} * beta.
Int det_closed(const MultipartiteSpec& spec);

/// lambda = det/cof = beta/gamma; requires gamma != 0.
Rational lambda_closed(const MultipartiteSpec& spec);

/// The explicit first-column/diagonal matrix whose determinant is
/// (-1)^{m-1} sum_i n_i prod_{j != i}(n_j - 2). Returns that value after
/// checking the built matrix against the closed form.
Int det_Cm(const std::vector<long>& n);

/// Constructive positive-integer solution of sum_i 1/q_i = r/2 with p terms,
/// valid for 1 <= r <= 2p.
std::vector<long> reciprocal_sum_solution(long p, long r);

struct IdentityFailure {
    std::string name;
    std::string operands;
};

struct IdentityReport {
    std::size_t checked = 0;
    std::vector<IdentityFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Exercises beta = gamma + alpha, the subset recurrences for gamma and beta
/// over proper subsets (sizes up to `subset_cap`, all subsets when the set is
/// small), and the three deletion identities used by the block-inverse proof.
/// Every check is an exact integer identity; the report must come back clean.
IdentityReport identity_suite(const std::vector<long>& indices,
                              std::size_t subset_cap = 12);

}  // namespace distblock::forms
