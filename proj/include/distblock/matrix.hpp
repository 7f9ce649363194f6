#pragma once

#include <cstddef>
#include <vector>

#include "distblock/rational.hpp"

namespace distblock {

/// Dense row-major matrix of exact rationals. Zero-dimension matrices are
/// legal and behave as empty blocks in concatenation and products.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// The all-ones matrix J.
    static ExactMatrix ones(std::size_t rows, std::size_t cols);
    static ExactMatrix constant(std::size_t rows, std::size_t cols, const Rational& v);
    /// a*I_n + b*J_n.
    static ExactMatrix aI_bJ(std::size_t n, const Rational& a, const Rational& b);
    static ExactMatrix column(const std::vector<Rational>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    ExactMatrix transpose() const;
    ExactMatrix operator-() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const Rational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

    bool is_symmetric() const;
    bool is_zero() const;
    bool all_integer() const;

    Rational row_sum(std::size_t i) const;
    Rational col_sum(std::size_t j) const;
    /// Sum of every entry.
    Rational total() const;

    /// Submatrix with row i and column j removed.
    ExactMatrix minor_matrix(std::size_t i, std::size_t j) const;
    ExactMatrix submatrix(std::size_t row0, std::size_t col0,
                          std::size_t rows, std::size_t cols) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

/// Matrix-vector product A*x.
std::vector<Rational> mat_vec(const ExactMatrix& a, const std::vector<Rational>& x);
/// Row-vector product xᵗ*A, returned as a plain vector.
std::vector<Rational> vec_mat(const std::vector<Rational>& x, const ExactMatrix& a);
/// Outer product x*yᵗ.
ExactMatrix outer(const std::vector<Rational>& x, const std::vector<Rational>& y);

}  // namespace distblock
