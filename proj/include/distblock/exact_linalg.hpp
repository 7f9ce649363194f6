#pragma once

#include <cstddef>
#include <vector>

#include "distblock/matrix.hpp"

namespace distblock::linalg {

/// Kernel execution policy. `parallel` enables the OpenMP row-update loops
/// for large matrices; `serial` is the reference path the tests compare it
/// against. Exact arithmetic makes both produce identical results.
enum class Exec { serial, parallel };

/// Exact determinant by fraction-free (Bareiss) elimination. Rational input
/// is row-scaled to integers first so the elimination runs on mpz only.
/// The 0x0 matrix has determinant 1.
Rational determinant(const ExactMatrix& a, Exec exec = Exec::parallel);

/// Fraction-free elimination on an integer matrix; entries of the working
/// matrix stay integral (they are minors of the input).
Int determinant_int(std::vector<Int> m, std::size_t n, Exec exec = Exec::parallel);

/// Adjugate via first-principles cofactor minors: Adj(A)(i,j) is the (j,i)
/// cofactor. O(n^2) sub-determinants; intended for oracle use on small n,
/// and valid for singular input.
ExactMatrix adjugate(const ExactMatrix& a);

/// Sum of all cofactors, computed as det M(1|1) where M subtracts the first
/// row from all rows and then the first column from all columns. Works for
/// singular matrices; cof of a 1x1 matrix is 1.
Rational cofactor_sum(const ExactMatrix& a, Exec exec = Exec::parallel);

/// Exact inverse by Gauss-Jordan elimination; throws SingularError (with the
/// zero determinant in the message) on singular input.
ExactMatrix inverse(const ExactMatrix& a);

/// Closed-form inverse of a*I_n + b*J_n: (1/a)(I - b/(a+nb) J).
/// Requires a != 0 and a + n*b != 0.
ExactMatrix inv_aI_bJ(std::size_t n, const Rational& a, const Rational& b);

/// B11 - B12 B22^{-1} B21 for B split after row/column `split`.
ExactMatrix schur_complement(const ExactMatrix& b, std::size_t split);

/// Four-block inverse assembled from the Schur complement of B22.
/// Must reproduce inverse(b) whenever both exist.
ExactMatrix schur_block_inverse(const ExactMatrix& b, std::size_t split);

/// Dense concatenation of a 2D arrangement of blocks. Blocks with a zero
/// dimension are skipped; remaining dimensions must be consistent per grid
/// row and per grid column.
ExactMatrix block_assemble(const std::vector<std::vector<ExactMatrix>>& grid);

}  // namespace distblock::linalg
