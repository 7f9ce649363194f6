#pragma once

#include <vector>

#include "distblock/graph.hpp"
#include "distblock/matrix.hpp"
#include "distblock/multipartite.hpp"

namespace distblock::spectral {

/// The triple driving the rank-one inverse formula: lambda = det/cof, the
/// vertex vector mu with muᵗ1 = 1 and D mu = lambda 1, and the symmetric
/// Laplacian-like matrix with all row and column sums zero satisfying
/// LD + I = mu 1ᵗ.
struct SpectralData {
    Rational lambda;
    std::vector<Rational> mu;
    ExactMatrix lap_like;
};

/// mu(v) = prod_{j != i}(n_j - 2) / gamma for v in part i. Requires cof != 0.
std::vector<Rational> mu_single(const MultipartiteSpec& spec);

/// Laplacian-like matrix of a single block:
///   diagonal          a_i = ((n_i-1) beta_hat_i - 2 gamma_hat_i) / (2 gamma)
///   same-part         b_i = -beta_hat_i / (2 gamma)
///   cross-part        c_ij = prod_{l != i,j}(n_l - 2) / gamma
/// Requires cof != 0.
ExactMatrix lap_like_single(const MultipartiteSpec& spec);

/// The four left conditions and four right conditions of the LapExp
/// structure, each reported separately.
struct LapExpReport {
    bool mu_sum_one = false;     // muᵗ 1 = 1
    bool lap_rows_zero = false;  // L 1 = 0
    bool muD_lambda = false;     // muᵗ D = lambda 1ᵗ
    bool LD_identity = false;    // L D + I = mu 1ᵗ

    bool right_mu_sum_one = false;  // 1ᵗ mu = 1
    bool lap_cols_zero = false;     // 1ᵗ L = 0
    bool Dmu_lambda = false;        // D mu = lambda 1
    bool DL_identity = false;       // D L + I = 1 muᵗ

    bool left() const { return mu_sum_one && lap_rows_zero && muD_lambda && LD_identity; }
    bool right() const {
        return right_mu_sum_one && lap_cols_zero && Dmu_lambda && DL_identity;
    }
    bool all() const { return left() && right(); }
};

LapExpReport lapexp_check(const ExactMatrix& d, const Rational& lambda,
                          const std::vector<Rational>& mu, const ExactMatrix& lap);

/// Multi-block composition: lambda adds over blocks, per-block mu is
/// zero-extended off-block and corrected by -(k-1) at a vertex lying in k
/// blocks, per-block L is zero-padded and summed. Requires cof != 0 on every
/// block.
SpectralData spectral_multiblock(const graphs::MultiBlockGraph& g);

/// Block-form inverse of D(K_{n_1..n_m}):
///   diagonal blocks   ((2 beta_hat_i - gamma_hat_i) / (2 beta)) J - I/2
///   off-diagonal      -(prod_{l != i,j}(n_l - 2) / beta) J
/// Requires det != 0 (beta != 0).
ExactMatrix inverse_single_block(const MultipartiteSpec& spec);

/// -L + (1/lambda) mu muᵗ for a multi-block graph; requires every block to
/// have cof != 0 and lambda != 0 (else D is singular).
ExactMatrix inverse_multiblock(const graphs::MultiBlockGraph& g);

/// True iff the inverse of the (nonsingular) matrix cannot be written as a
/// rank-one perturbation of a Laplacian-like matrix, i.e. iff cof D = 0.
/// Cross-checks cof D against det(D) * 1ᵗ D^{-1} 1.
bool rank_one_obstruction(const ExactMatrix& d);

}  // namespace distblock::spectral
