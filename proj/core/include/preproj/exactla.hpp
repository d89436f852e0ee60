#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace preproj {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix from_ints(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Rational& s) const;
    bool operator==(const Matrix& other) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix form;
    std::vector<std::size_t> pivots;
};

// Pivot = first nonzero column, topmost available row.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
std::vector<Vector> image_basis(const Matrix& m);
// Free variables are set to zero.
std::optional<Vector> solve_particular(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

bool is_zero(const Vector& v);

// Factor once, then solve m x = b for many right-hand sides.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const Matrix& m);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::optional<Vector> solve(const Vector& b) const;
    bool in_image(const Vector& b) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Matrix transform_;  // transform_ * m = rref(m)
    std::vector<std::size_t> pivots_;
};

using SparseVector = std::map<std::size_t, Rational>;

// Incrementally maintained row space in reduced echelon form.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    // Returns true when v enlarged the span.
    bool add(SparseVector v);
    // Remainder of v after reduction by the current span.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    std::vector<std::size_t> pivots() const;
    // Rows in fully reduced form, ordered by pivot.
    std::vector<SparseVector> basis() const;

private:
    std::size_t dim_;
    std::map<std::size_t, SparseVector> rows_;  // pivot column -> row with leading 1
};

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);

}  // namespace preproj
