#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "distblock/matrix.hpp"

namespace distblock {

/// The composition (n_1, ..., n_m) of a complete multipartite graph
/// K_{n_1,...,n_m}. Requires m >= 2 and every part >= 1. The complete graph
/// K_m is the all-ones composition.
struct MultipartiteSpec {
    std::vector<long> parts;

    MultipartiteSpec() = default;
    explicit MultipartiteSpec(std::vector<long> p);

    std::size_t part_count() const { return parts.size(); }
    long vertex_count() const {
        return std::accumulate(parts.begin(), parts.end(), 0L);
    }

    /// Parts sorted ascending; classifiers are permutation-invariant.
    MultipartiteSpec sorted() const;
    std::string to_string() const;  // "1,1,4"
    static MultipartiteSpec parse(const std::string& text);

    friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;
    friend auto operator<=>(const MultipartiteSpec& a, const MultipartiteSpec& b) {
        return a.parts <=> b.parts;
    }
};

/// T_n = K_{1,1,n-2}: n-2 triangles sharing a common base edge. Defined for
/// n >= 3.
MultipartiteSpec t_n(long n);

namespace graphs {

/// Distance matrix of K_{n_1,...,n_m}, assembled in block form: diagonal
/// blocks 2(J - I), off-diagonal blocks J. Vertex order is part order.
ExactMatrix build_multipartite(const MultipartiteSpec& spec);

}  // namespace graphs

}  // namespace distblock
