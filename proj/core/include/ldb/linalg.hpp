#pragma once

#include "ldb/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace ldb {

/// Dense row-major rational matrix. Matrices act on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Builds a matrix whose j-th column is cols[j]; all columns need the same length.
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j);
    const Scalar& at(std::size_t i, std::size_t j) const;

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_column(std::size_t j, const Vec& v);

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_skew() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    const std::vector<Scalar>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Block-diagonal matrix diag(a, b).
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Exact inverse, or nullopt when singular. Throws ShapeError on non-square input.
std::optional<Matrix> inverse(const Matrix& m);
Scalar det(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column of the reduced echelon form.
std::vector<Vec> kernel(const Matrix& m);

struct LinearSolution {
    /// A particular solution X of a X = b, absent when the system is inconsistent.
    std::optional<Matrix> particular;
    std::vector<Vec> kernel;
    bool consistent() const { return particular.has_value(); }
};

/// Solves a X = b exactly. Throws ShapeError when a.rows() != b.rows().
LinearSolution solve_linear(const Matrix& a, const Matrix& b);

/// Convenience overload for a single right-hand side.
std::optional<Vec> solve_vector(const Matrix& a, const Vec& b);

}  // namespace ldb
