#include "preproj/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace preproj {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("from_rows: ragged input");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionError("from_columns: ragged input");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("from_ints: ragged input");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (sgn(other(k, j)) != 0) p(i, j) += a * other(k, j);
        }
    return p;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw DimensionError("matrix-vector product: dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0) out[i] += (*this)(i, k) * v[k];
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
    Matrix s(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += other.data_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shape mismatch");
    Matrix s(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= other.data_[i];
    return s;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix m(*this);
    for (auto& x : m.data_) x *= s;
    return m;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// In-place reduction; also applies the same row operations to `companion` when given.
std::vector<std::size_t> reduce_in_place(Matrix& m, Matrix* companion) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    Rational factor;
    for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t r = prow; r < m.rows(); ++r)
            if (sgn(m(r, c)) != 0) {
                sel = r;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != prow) {
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(prow, k));
            if (companion)
                for (std::size_t k = 0; k < companion->cols(); ++k) std::swap((*companion)(sel, k), (*companion)(prow, k));
        }
        Rational inv = 1 / m(prow, c);
        if (inv != 1) {
            for (std::size_t k = c; k < m.cols(); ++k) m(prow, k) *= inv;
            if (companion)
                for (std::size_t k = 0; k < companion->cols(); ++k) (*companion)(prow, k) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow || sgn(m(r, c)) == 0) continue;
            factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (sgn(m(prow, k)) != 0) m(r, k) -= factor * m(prow, k);
            if (companion)
                for (std::size_t k = 0; k < companion->cols(); ++k)
                    if (sgn((*companion)(prow, k)) != 0) (*companion)(r, k) -= factor * (*companion)(prow, k);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

}  // namespace

RrefResult rref(Matrix m) {
    auto pivots = reduce_in_place(m, nullptr);
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> image_basis(const Matrix& m) {
    auto [r, pivots] = rref(m.transpose());
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < pivots.size(); ++k) basis.push_back(r.row(k));
    return basis;
}

std::optional<Vector> solve_particular(const Matrix& m, const Vector& b) {
    return LinearSolver(m).solve(b);
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
    Matrix work(m);
    Matrix inv = Matrix::identity(m.rows());
    auto pivots = reduce_in_place(work, &inv);
    if (pivots.size() != m.rows()) return std::nullopt;
    return inv;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
    Matrix work(m);
    transform_ = Matrix::identity(m.rows());
    pivots_ = reduce_in_place(work, &transform_);
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
    if (b.size() != rows_) throw DimensionError("solve: right-hand side has wrong length");
    Vector tb = transform_ * b;
    for (std::size_t r = pivots_.size(); r < rows_; ++r)
        if (sgn(tb[r]) != 0) return std::nullopt;
    Vector x(cols_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) x[pivots_[k]] = tb[k];
    return x;
}

bool LinearSolver::in_image(const Vector& b) const {
    if (b.size() != rows_) throw DimensionError("in_image: vector has wrong length");
    for (std::size_t r = pivots_.size(); r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t k = 0; k < rows_; ++k)
            if (sgn(b[k]) != 0 && sgn(transform_(r, k)) != 0) acc += transform_(r, k) * b[k];
        if (sgn(acc) != 0) return false;
    }
    return true;
}

SparseVector RowSpace::reduce(SparseVector v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Rational f = it->second;
        std::size_t key = it->first;
        for (const auto& [c, x] : row->second) {
            auto& slot = v[c];
            slot -= f * x;
        }
        for (auto jt = v.upper_bound(key); jt != v.end();) {
            if (sgn(jt->second) == 0)
                jt = v.erase(jt);
            else
                ++jt;
        }
        v.erase(key);
        it = v.upper_bound(key);
    }
    return v;
}

bool RowSpace::add(SparseVector v) {
    if (!v.empty() && v.rbegin()->first >= dim_) throw DimensionError("RowSpace::add: index out of range");
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational lead = v.begin()->second;
    if (lead != 1)
        for (auto& [c, x] : v) x /= lead;
    rows_.emplace(v.begin()->first, std::move(v));
    return true;
}

std::vector<std::size_t> RowSpace::pivots() const {
    std::vector<std::size_t> p;
    for (const auto& [k, _] : rows_) p.push_back(k);
    return p;
}

std::vector<SparseVector> RowSpace::basis() const {
    std::vector<SparseVector> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseVector row = it->second;
        SparseVector tail(std::next(row.begin()), row.end());
        tail = reduce(std::move(tail));
        tail[it->first] = 1;
        out.push_back(std::move(tail));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SparseVector to_sparse(const Vector& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) s.emplace(i, v[i]);
    return s;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
    Vector d(dim);
    for (const auto& [i, x] : v) {
        if (i >= dim) throw DimensionError("to_dense: index out of range");
        d[i] = x;
    }
    return d;
}

}  // namespace preproj
