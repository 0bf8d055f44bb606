#include "rft/matrix.hpp"

#include <sstream>
#include <utility>

namespace rft {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum shapes");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e *= factor;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& indices) const {
    Matrix out(rows_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= cols_) throw DimensionMismatch("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, indices[j]);
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ && !empty() && !rhs.empty())
        throw DimensionMismatch("hstack row counts");
    const std::size_t r = cols_ == 0 ? rhs.rows_ : rows_;
    if ((cols_ != 0 && rows_ != r) || (rhs.cols_ != 0 && rhs.rows_ != r))
        throw DimensionMismatch("hstack row counts");
    Matrix out(r, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
    return transpose().hstack(rhs.transpose()).transpose();
}

std::string Matrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << to_string((*this)(i, j));
        }
        out << '\n';
    }
    return out.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult result{m, {}, 0};
    Matrix& a = result.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(pivot_row, j));
        const Rational inv = Rational(1) / a(pivot_row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a(i, col) == 0) continue;
            const Rational factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= factor * a(pivot_row, j);
        }
        result.pivot_columns.push_back(col);
        ++pivot_row;
    }
    result.rank = result.pivot_columns.size();
    return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

OrderedBasis kernel_basis(const Matrix& m) {
    const RrefResult red = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t next_pivot = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (next_pivot < red.pivot_columns.size() && red.pivot_columns[next_pivot] == c)
                ++next_pivot;
            else
                free_cols.push_back(c);
        }
    }
    Matrix vectors(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        vectors(free_cols[k], k) = 1;
        for (std::size_t r = 0; r < red.rank; ++r)
            vectors(red.pivot_columns[r], k) = -red.reduced(r, free_cols[k]);
    }
    return OrderedBasis(m.cols(), std::move(vectors));
}

ImageBasis image_basis(const Matrix& m) {
    const RrefResult red = rref(m);
    return ImageBasis{OrderedBasis(m.rows(), m.columns(red.pivot_columns)),
                      red.pivot_columns};
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        const Rational inv = Rational(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rational factor = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve shapes");
    const RrefResult red = rref(a.hstack(b));
    // Inconsistent iff some pivot lands in the appended block.
    for (std::size_t c : red.pivot_columns)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < red.pivot_columns.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(red.pivot_columns[r], j) = red.reduced(r, a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("inverse of non-square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.rows()));
}

Rational transition_determinant(const OrderedBasis& e, const OrderedBasis& f) {
    if (e.count() != f.count())
        throw DimensionMismatch("bases of different sizes");
    if (e.count() == 0) return Rational(1);  // trivial space contributes 1
    if (e.ambient_dim != f.ambient_dim)
        throw DimensionMismatch("bases in different ambient spaces");
    // e_i = sum_j a_ij f_j  <=>  E = F * A^T; det A = det A^T.
    auto coords = solve(f.vectors, e.vectors);
    if (!coords) throw NotExpressible("basis vector outside the span of the target basis");
    return determinant(*coords);
}

}  // namespace rft
