#pragma once

#include <random>
#include <vector>

#include "distblock/matrix.hpp"

namespace testutil {

using distblock::ExactMatrix;
using distblock::Rational;

inline ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline ExactMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, long lo = -5,
                                     long hi = 5) {
    std::uniform_int_distribution<long> pick(lo, hi);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = pick(rng);
    return m;
}

inline ExactMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 6);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace testutil
