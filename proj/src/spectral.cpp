#include "distblock/spectral.hpp"

#include <algorithm>

#include "distblock/closed_forms.hpp"
#include "distblock/errors.hpp"
#include "distblock/exact_linalg.hpp"
#include "distblock/t6_family.hpp"

namespace distblock::spectral {

namespace {

Int gamma_or_throw(const MultipartiteSpec& spec) {
    Int g = forms::gamma(spec.parts);
    if (g == 0)
        throw FormulaInapplicableError("cof D = 0 for K_{" + spec.to_string() +
                                       "}; mu and the Laplacian-like matrix "
                                       "are undefined");
    return g;
}

}  // namespace

std::vector<Rational> mu_single(const MultipartiteSpec& spec) {
    const Int g = gamma_or_throw(spec);
    std::vector<Rational> mu;
    mu.reserve(spec.vertex_count());
    for (std::size_t i = 0; i < spec.part_count(); ++i) {
        Int prod = 1;
        for (std::size_t j = 0; j < spec.part_count(); ++j)
            if (j != i) prod *= Int(spec.parts[j] - 2);
        Rational value(prod, g);
        for (long rep = 0; rep < spec.parts[i]; ++rep) mu.push_back(value);
    }
    return mu;
}

ExactMatrix lap_like_single(const MultipartiteSpec& spec) {
    const Int g = gamma_or_throw(spec);
    const std::size_t m = spec.part_count();

    std::vector<Int> beta_hat(m), gamma_hat(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto del = forms::erase_index(spec.parts, i);
        beta_hat[i] = forms::beta(del);
        gamma_hat[i] = forms::gamma(del);
    }

    std::vector<std::vector<ExactMatrix>> grid(m, std::vector<ExactMatrix>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto ni = static_cast<std::size_t>(spec.parts[i]);
        const Rational a_i(Int(spec.parts[i] - 1) * beta_hat[i] - 2 * gamma_hat[i],
                           2 * g);
        const Rational b_i(-beta_hat[i], 2 * g);
        grid[i][i] = ExactMatrix::aI_bJ(ni, a_i - b_i, b_i);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            Int prod = 1;
            for (std::size_t l = 0; l < m; ++l)
                if (l != i && l != j) prod *= Int(spec.parts[l] - 2);
            grid[i][j] = ExactMatrix::constant(
                ni, static_cast<std::size_t>(spec.parts[j]), Rational(prod, g));
        }
    }
    return linalg::block_assemble(grid);
}

LapExpReport lapexp_check(const ExactMatrix& d, const Rational& lambda,
                          const std::vector<Rational>& mu, const ExactMatrix& lap) {
    const std::size_t n = d.rows();
    if (!d.is_square() || lap.rows() != n || lap.cols() != n || mu.size() != n)
        throw DimensionError("lapexp_check: conformal dimensions required");

    LapExpReport rep;
    Rational mu_total;
    for (const auto& v : mu) mu_total += v;
    rep.mu_sum_one = mu_total == Rational(1);
    rep.right_mu_sum_one = rep.mu_sum_one;

    rep.lap_rows_zero = true;
    rep.lap_cols_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!lap.row_sum(i).is_zero()) rep.lap_rows_zero = false;
        if (!lap.col_sum(i).is_zero()) rep.lap_cols_zero = false;
    }

    auto muD = vec_mat(mu, d);
    rep.muD_lambda = std::all_of(muD.begin(), muD.end(),
                                 [&](const Rational& v) { return v == lambda; });
    auto Dmu = mat_vec(d, mu);
    rep.Dmu_lambda = std::all_of(Dmu.begin(), Dmu.end(),
                                 [&](const Rational& v) { return v == lambda; });

    const std::vector<Rational> ones(n, Rational(1));
    rep.LD_identity = lap * d + ExactMatrix::identity(n) == outer(mu, ones);
    rep.DL_identity = d * lap + ExactMatrix::identity(n) == outer(ones, mu);
    return rep;
}

SpectralData spectral_multiblock(const graphs::MultiBlockGraph& g) {
    graphs::require_valid(g);
    const auto n = static_cast<std::size_t>(g.vertex_count);

    SpectralData data;
    data.mu.assign(n, Rational(0));
    data.lap_like = ExactMatrix::zero(n, n);

    std::vector<int> multiplicity(n, 0);
    for (std::size_t t = 0; t < g.blocks.size(); ++t) {
        const auto& blk = g.blocks[t];
        const auto spec = blk.spec();
        Int gam = forms::gamma(spec.parts);
        if (gam == 0)
            throw FormulaInapplicableError(
                "block " + std::to_string(t) + " (K_{" + spec.to_string() +
                "}) has cof D = 0; the spectral composition does not apply");

        data.lambda += forms::lambda_closed(spec);

        // per-block mu and L live on the block's vertices, zero elsewhere
        auto mu_blk = mu_single(spec);
        auto lap_blk = lap_like_single(spec);
        std::vector<graphs::VertexId> order;
        for (const auto& part : blk.parts)
            order.insert(order.end(), part.begin(), part.end());
        for (std::size_t a = 0; a < order.size(); ++a) {
            const auto va = static_cast<std::size_t>(order[a]);
            data.mu[va] += mu_blk[a];
            ++multiplicity[va];
            for (std::size_t b = 0; b < order.size(); ++b)
                data.lap_like(va, static_cast<std::size_t>(order[b])) += lap_blk(a, b);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        data.mu[v] -= Rational(multiplicity[v] - 1);
    return data;
}

ExactMatrix inverse_single_block(const MultipartiteSpec& spec) {
    const Int b = forms::beta(spec.parts);
    if (b == 0)
        throw SingularError("det D = 0 for K_{" + spec.to_string() +
                            "}; no inverse exists");
    const std::size_t m = spec.part_count();

    std::vector<std::vector<ExactMatrix>> grid(m, std::vector<ExactMatrix>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto ni = static_cast<std::size_t>(spec.parts[i]);
        auto del = forms::erase_index(spec.parts, i);
        const Rational diag_j(2 * forms::beta(del) - forms::gamma(del), 2 * b);
        grid[i][i] = ExactMatrix::aI_bJ(ni, Rational(-1, 2), diag_j);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            Int prod = 1;
            for (std::size_t l = 0; l < m; ++l)
                if (l != i && l != j) prod *= Int(spec.parts[l] - 2);
            grid[i][j] = ExactMatrix::constant(
                ni, static_cast<std::size_t>(spec.parts[j]), Rational(-prod, b));
        }
    }
    return linalg::block_assemble(grid);
}

ExactMatrix inverse_multiblock(const graphs::MultiBlockGraph& g) {
    for (const auto& blk : g.blocks) {
        auto spec = blk.spec();
        if (forms::gamma(spec.parts) != 0) continue;
        std::string msg = "block K_{" + spec.to_string() +
                          "} has cof D = 0; the rank-one inverse formula does "
                          "not apply";
        if (t6family::detect(g))
            msg += " (the graph is a T_6 family instance; use the R-matrix inverse)";
        throw FormulaInapplicableError(msg);
    }
    auto data = spectral_multiblock(g);
    if (data.lambda.is_zero())
        throw SingularError(
            "lambda = 0: det D(G) = 0 and the rank-one inverse does not exist");
    ExactMatrix inv = -data.lap_like;
    inv += data.lambda.reciprocal() * outer(data.mu, data.mu);
    return inv;
}

bool rank_one_obstruction(const ExactMatrix& d) {
    if (!d.is_square() || d.rows() == 0)
        throw DimensionError("rank_one_obstruction needs a square matrix");
    Rational det = linalg::determinant(d);
    if (det.is_zero()) throw SingularError("rank_one_obstruction: matrix is singular");

    Rational cof = linalg::cofactor_sum(d);
    Rational quad = linalg::inverse(d).total();  // 1ᵗ D^{-1} 1 = cof/det
    if (quad * det != cof)
        throw Error("cofactor_sum and 1ᵗD⁻¹1 disagree");
    return cof.is_zero();
}

}  // namespace distblock::spectral
