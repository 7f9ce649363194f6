#include "distblock/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "distblock/errors.hpp"

namespace distblock::linalg {

namespace {

constexpr std::size_t kParallelThreshold = 48;

// One Bareiss step: for rows below k, M[i][j] <- (M[i][j]*piv - M[i][k]*M[k][j]) / prev.
// The division is exact (Sylvester's identity); every entry of the working
// matrix is a minor of the original, so growth stays polynomial in the input
// minors rather than doubly exponential. Rows are independent, which is what
// the parallel path exploits.
void bareiss_step(std::vector<Int>& m, std::size_t n, std::size_t k,
                  const Int& prev, bool parallel) {
    const Int piv = m[k * n + k];
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t i = k + 1; i < n; ++i) {
        Int mik = m[i * n + k];
        for (std::size_t j = k + 1; j < n; ++j) {
            Int& x = m[i * n + j];
            x = x * piv - mik * m[k * n + j];
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        }
        m[i * n + k] = 0;
    }
}

}  // namespace

Int determinant_int(std::vector<Int> m, std::size_t n, Exec exec) {
    if (n == 0) return 1;
    bool parallel = exec == Exec::parallel && n >= kParallelThreshold;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // first nonzero pivot in column order; exact arithmetic needs no
        // magnitude-based pivoting
        std::size_t piv = k;
        while (piv < n && m[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
            sign = -sign;
        }
        bareiss_step(m, n, k, prev, parallel);
        prev = m[k * n + k];
    }
    Int det = m[(n - 1) * n + (n - 1)];
    return sign < 0 ? Int(-det) : det;
}

Rational determinant(const ExactMatrix& a, Exec exec) {
    if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    // Clear denominators row by row; det(A) = det(scaled) / prod(scales).
    std::vector<Int> m(n * n);
    Int scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = a(i, j);
            m[i * n + j] = e.num() * (l / e.den());
        }
        scale_product *= l;
    }
    return Rational(determinant_int(std::move(m), n, exec), scale_product);
}

ExactMatrix adjugate(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionError("adjugate of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) throw DimensionError("adjugate of the 0x0 matrix");
    ExactMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = determinant(a.minor_matrix(i, j), Exec::serial);
            adj(j, i) = (i + j) % 2 == 0 ? c : -c;
        }
    return adj;
}

Rational cofactor_sum(const ExactMatrix& a, Exec exec) {
    if (!a.is_square()) throw DimensionError("cofactor_sum of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) throw DimensionError("cofactor_sum of the 0x0 matrix");
    // M(1|1) after the row/column subtractions, written out directly.
    ExactMatrix m(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            m(i - 1, j - 1) = a(i, j) - a(0, j) - a(i, 0) + a(0, 0);
    return determinant(m, exec);
}

ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    ExactMatrix m = a;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n)
            throw SingularError("singular matrix (determinant = " +
                                determinant(a).to_string() + ")");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        }
        Rational d = m(k, k).reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) *= d;
            inv(k, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            Rational f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

ExactMatrix inv_aI_bJ(std::size_t n, const Rational& a, const Rational& b) {
    if (a.is_zero()) throw SingularError("aI+bJ with a = 0 is singular");
    Rational a_nb = a + Rational(Int(n)) * b;
    if (a_nb.is_zero())
        throw SingularError("aI+bJ with a + n*b = 0 is singular");
    Rational inv_a = a.reciprocal();
    return ExactMatrix::aI_bJ(n, inv_a, -(inv_a * b / a_nb));
}

ExactMatrix schur_complement(const ExactMatrix& b, std::size_t split) {
    if (!b.is_square()) throw DimensionError("schur_complement of a non-square matrix");
    if (split > b.rows()) throw DimensionError("split exceeds matrix dimension");
    const std::size_t k = split, r = b.rows() - split;
    ExactMatrix b11 = b.submatrix(0, 0, k, k);
    ExactMatrix b12 = b.submatrix(0, k, k, r);
    ExactMatrix b21 = b.submatrix(k, 0, r, k);
    ExactMatrix b22 = b.submatrix(k, k, r, r);
    return b11 - b12 * inverse(b22) * b21;
}

ExactMatrix schur_block_inverse(const ExactMatrix& b, std::size_t split) {
    const std::size_t k = split, r = b.rows() - split;
    ExactMatrix b12 = b.submatrix(0, k, k, r);
    ExactMatrix b21 = b.submatrix(k, 0, r, k);
    ExactMatrix b22_inv = inverse(b.submatrix(k, k, r, r));
    ExactMatrix s_inv = inverse(schur_complement(b, split));
    ExactMatrix top_right = -(s_inv * b12 * b22_inv);
    ExactMatrix bottom_left = -(b22_inv * b21 * s_inv);
    ExactMatrix bottom_right = b22_inv + b22_inv * b21 * s_inv * b12 * b22_inv;
    return block_assemble({{s_inv, top_right}, {bottom_left, bottom_right}});
}

ExactMatrix block_assemble(const std::vector<std::vector<ExactMatrix>>& grid) {
    const std::size_t gr = grid.size();
    const std::size_t gc = gr == 0 ? 0 : grid[0].size();
    for (const auto& row : grid)
        if (row.size() != gc) throw DimensionError("ragged block grid");

    // A dimension of 0 marks a block that "does not exist"; it contributes
    // nothing but must not contradict its row/column.
    std::vector<std::size_t> heights(gr, 0), widths(gc, 0);
    for (std::size_t i = 0; i < gr; ++i)
        for (std::size_t j = 0; j < gc; ++j) {
            const ExactMatrix& blk = grid[i][j];
            if (blk.rows() != 0) {
                if (heights[i] != 0 && heights[i] != blk.rows())
                    throw DimensionError("inconsistent block row heights");
                heights[i] = blk.rows();
            }
            if (blk.cols() != 0) {
                if (widths[j] != 0 && widths[j] != blk.cols())
                    throw DimensionError("inconsistent block column widths");
                widths[j] = blk.cols();
            }
        }

    std::size_t total_r = 0, total_c = 0;
    std::vector<std::size_t> row0(gr), col0(gc);
    for (std::size_t i = 0; i < gr; ++i) { row0[i] = total_r; total_r += heights[i]; }
    for (std::size_t j = 0; j < gc; ++j) { col0[j] = total_c; total_c += widths[j]; }

    ExactMatrix out(total_r, total_c);
    for (std::size_t i = 0; i < gr; ++i)
        for (std::size_t j = 0; j < gc; ++j) {
            const ExactMatrix& blk = grid[i][j];
            if (blk.is_empty()) continue;
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    out(row0[i] + r, col0[j] + c) = blk(r, c);
        }
    return out;
}

}  // namespace distblock::linalg
