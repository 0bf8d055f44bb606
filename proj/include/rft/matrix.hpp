// Dense matrices of exact rationals: reduction, kernels, images,
// determinants, and transition determinants between ordered bases.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rft/rational.hpp"

namespace rft {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonSquare : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotExpressible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row-major dense matrix over the rationals. Shapes with zero rows or
/// columns are legal everywhere; they model the zero spaces at the ends
/// of a chain complex.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Build from nested initializer data, one inner vector per row.
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    bool operator==(const Matrix& other) const = default;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& factor) const;

    bool is_zero() const;

    Matrix column(std::size_t c) const;
    /// Columns selected by index, in the given order.
    Matrix columns(const std::vector<std::size_t>& indices) const;
    /// [this | rhs] side by side; row counts must agree.
    Matrix hstack(const Matrix& rhs) const;
    /// this on top of rhs; column counts must agree.
    Matrix vstack(const Matrix& rhs) const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;  // strictly increasing
    std::size_t rank = 0;
};

/// Reduced row echelon form via exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// An ordered list of vectors in a fixed ambient coordinate space,
/// stored as the columns of `vectors`.
struct OrderedBasis {
    std::size_t ambient_dim = 0;
    Matrix vectors;  // ambient_dim x count
    std::vector<std::string> labels;

    OrderedBasis() = default;
    explicit OrderedBasis(Matrix columns)
        : ambient_dim(columns.rows()), vectors(std::move(columns)) {}
    OrderedBasis(std::size_t ambient, Matrix columns)
        : ambient_dim(ambient), vectors(std::move(columns)) {}

    std::size_t count() const { return vectors.cols(); }
    static OrderedBasis standard(std::size_t n) { return OrderedBasis(n, Matrix::identity(n)); }
    static OrderedBasis empty(std::size_t ambient) {
        return OrderedBasis(ambient, Matrix(ambient, 0));
    }
    bool independent() const { return rank(vectors) == count(); }
};

/// Null-space basis, ordered by free-column index. Count = cols - rank.
OrderedBasis kernel_basis(const Matrix& m);

struct ImageBasis {
    OrderedBasis basis;
    /// Standard-basis column of m mapping onto each basis vector, so a
    /// section of m onto its image is "free column index -> unit vector".
    std::vector<std::size_t> preimage_columns;
};

/// Column-space basis: the columns of m at its pivot columns.
ImageBasis image_basis(const Matrix& m);

/// Exact determinant by rational Gaussian elimination. Throws NonSquare.
Rational determinant(const Matrix& m);

/// Solve a * x = b exactly; nullopt when inconsistent. Free variables
/// are set to zero (pivot-ordered particular solution).
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Determinant of the transition matrix (a_ij) with e_i = sum_j a_ij f_j.
/// Both bases empty (the trivial space) gives 1. Throws DimensionMismatch
/// when counts or ambient dimensions differ, NotExpressible when some e_i
/// is not in the span of f.
Rational transition_determinant(const OrderedBasis& e, const OrderedBasis& f);

}  // namespace rft
