#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

// Dense row-major matrix over a fixed field. Immutable in spirit: the
// free functions below never modify their inputs.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
               data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

Matrix identity(const Field& f, std::size_t n);
Matrix transpose(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);

// Row rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const Matrix& m);

// Basis of the right null space, one basis vector per row; result has
// (cols - rank) rows and cols columns, and m * transpose(row) = 0 holds
// for every row.
Matrix kernel(const Matrix& m);

// Row basis of m: the nonzero rows of its reduced row echelon form,
// rank(m) rows in total.
Matrix row_basis(const Matrix& m);

// Rank of the submatrix made of the selected columns (all rows).
std::size_t rank_of_columns(const Matrix& m,
                            const std::vector<std::size_t>& cols);

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx);
Matrix columns_of(const Matrix& m, const std::vector<std::size_t>& col_idx);

// True iff v lies in the row span of a. v must have a.cols() entries.
bool row_span_contains(const Matrix& a, const std::vector<Elem>& v);

// h x |S| matrix with entry (i, j) = S[j]^(q^i), i = 0..h-1. S must be
// sorted non-descending by element_order_key; q must be a power of the
// field characteristic compatible with frobenius().
Matrix moore_matrix(const Field& f, const std::vector<Elem>& s, std::size_t h,
                    std::uint64_t q);

// rows x |points| matrix with entry (i, j) = points[j]^i (row 0 all ones).
// Points must be pairwise distinct.
Matrix vandermonde(const Field& f, const std::vector<Elem>& points,
                   std::size_t rows);

// Assemble a dense matrix from a grid of optional blocks; absent blocks
// are zero. Every block row and block column must contain at least one
// present block so its dimension is determined, and present blocks must
// agree on row heights and column widths.
Matrix block_assemble(
    const std::vector<std::vector<std::optional<Matrix>>>& layout);

}  // namespace lrc
