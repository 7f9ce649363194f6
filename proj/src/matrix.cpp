#include "distblock/matrix.hpp"

#include "distblock/errors.hpp"

namespace distblock {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
    return constant(rows, cols, 1);
}

ExactMatrix ExactMatrix::constant(std::size_t rows, std::size_t cols, const Rational& v) {
    ExactMatrix m(rows, cols);
    for (auto& e : m.e_) e = v;
    return m;
}

ExactMatrix ExactMatrix::aI_bJ(std::size_t n, const Rational& a, const Rational& b) {
    ExactMatrix m = constant(n, n, b);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += a;
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Rational>& v) {
    ExactMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& e : m.e_) e = -e;
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix addition dimension mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix subtraction dimension mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
    for (auto& e : e_) e *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExactMatrix::all_integer() const {
    for (const auto& e : e_)
        if (!e.is_integer()) return false;
    return true;
}

Rational ExactMatrix::row_sum(std::size_t i) const {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
    return s;
}

Rational ExactMatrix::col_sum(std::size_t j) const {
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
    return s;
}

Rational ExactMatrix::total() const {
    Rational s;
    for (const auto& e : e_) s += e;
    return s;
}

ExactMatrix ExactMatrix::minor_matrix(std::size_t i, std::size_t j) const {
    if (rows_ == 0 || cols_ == 0) throw DimensionError("minor of an empty matrix");
    ExactMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
            if (c == j) continue;
            m(mr, mc++) = (*this)(r, c);
        }
        ++mr;
    }
    return m;
}

ExactMatrix ExactMatrix::submatrix(std::size_t row0, std::size_t col0,
                                   std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_)
        throw DimensionError("submatrix out of range");
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(row0 + i, col0 + j);
    return m;
}

std::vector<Rational> mat_vec(const ExactMatrix& a, const std::vector<Rational>& x) {
    if (a.cols() != x.size()) throw DimensionError("mat_vec dimension mismatch");
    std::vector<Rational> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

std::vector<Rational> vec_mat(const std::vector<Rational>& x, const ExactMatrix& a) {
    if (a.rows() != x.size()) throw DimensionError("vec_mat dimension mismatch");
    std::vector<Rational> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
    return y;
}

ExactMatrix outer(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    ExactMatrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
    return m;
}

}  // namespace distblock
