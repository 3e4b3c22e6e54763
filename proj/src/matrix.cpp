#include "lrc/matrix.hpp"

#include <stdexcept>

namespace lrc {
namespace {

// Forward elimination in place; returns pivot column per eliminated row.
// Rows of `a` are full matrix rows (vectors of Elem). When `rref` is set,
// pivots are scaled to 1 and cleared above as well, giving reduced form.
std::vector<std::size_t> eliminate(const Field& f,
                                   std::vector<std::vector<Elem>>& a,
                                   bool rref) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && f.is_zero(a[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        Elem piv_inv = f.inv(a[r][c]);
        if (rref) {
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = f.mul(a[r][j], piv_inv);
        }
        for (std::size_t i = rref ? 0 : r + 1; i < rows; ++i) {
            if (i == r || f.is_zero(a[i][c])) continue;
            Elem factor =
                rref ? a[i][c] : f.mul(a[i][c], piv_inv);
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Elem>> to_rows(const Matrix& m) {
    std::vector<std::vector<Elem>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i].push_back(m.at(i, j));
    }
    return rows;
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      data_(rows * cols, field_.zero()) {}

Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("matrix product across fields");
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) =
                    f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

std::size_t rank(const Matrix& m) {
    auto rows = to_rows(m);
    return eliminate(m.field(), rows, false).size();
}

Matrix kernel(const Matrix& m) {
    const Field& f = m.field();
    auto rows = to_rows(m);
    auto pivots = eliminate(f, rows, true);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    Matrix basis(f, n - pivots.size(), n);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(out, free_col) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.at(out, pivots[i]) = f.neg(rows[i][free_col]);
        ++out;
    }
    return basis;
}

Matrix row_basis(const Matrix& m) {
    const Field& f = m.field();
    auto rows = to_rows(m);
    auto pivots = eliminate(f, rows, true);
    Matrix basis(f, pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            basis.at(i, j) = rows[i][j];
    return basis;
}

std::size_t rank_of_columns(const Matrix& m,
                            const std::vector<std::size_t>& cols) {
    return rank(columns_of(m, cols));
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx) {
    Matrix s(m.field(), row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= m.rows())
            throw std::out_of_range("row index out of range");
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] >= m.cols())
                throw std::out_of_range("column index out of range");
            s.at(i, j) = m.at(row_idx[i], col_idx[j]);
        }
    }
    return s;
}

Matrix columns_of(const Matrix& m, const std::vector<std::size_t>& col_idx) {
    std::vector<std::size_t> all_rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
    return submatrix(m, all_rows, col_idx);
}

bool row_span_contains(const Matrix& a, const std::vector<Elem>& v) {
    if (v.size() != a.cols())
        throw std::invalid_argument("vector length mismatch");
    Matrix stacked(a.field(), a.rows() + 1, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            stacked.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < a.cols(); ++j)
        stacked.at(a.rows(), j) = v[j];
    return rank(stacked) == rank(a);
}

Matrix moore_matrix(const Field& f, const std::vector<Elem>& s, std::size_t h,
                    std::uint64_t q) {
    if (h < 1) throw std::invalid_argument("moore matrix needs h >= 1");
    for (std::size_t j = 0; j + 1 < s.size(); ++j)
        if (element_order_less(s[j + 1], s[j]))
            throw std::invalid_argument(
                "moore matrix points must be sorted non-descending");
    Matrix m(f, h, s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        f.validate(s[j]);
        m.at(0, j) = s[j];
    }
    for (std::size_t i = 1; i < h; ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            m.at(i, j) = f.frobenius(m.at(i - 1, j), q);
    return m;
}

Matrix vandermonde(const Field& f, const std::vector<Elem>& points,
                   std::size_t rows) {
    if (rows < 1) throw std::invalid_argument("vandermonde needs rows >= 1");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("vandermonde points must be distinct");
    Matrix m(f, rows, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        f.validate(points[j]);
        m.at(0, j) = f.one();
    }
    for (std::size_t i = 1; i < rows; ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            m.at(i, j) = f.mul(m.at(i - 1, j), points[j]);
    return m;
}

Matrix block_assemble(
    const std::vector<std::vector<std::optional<Matrix>>>& layout) {
    if (layout.empty()) throw std::invalid_argument("empty block layout");
    const std::size_t brows = layout.size();
    const std::size_t bcols = layout[0].size();
    for (const auto& row : layout)
        if (row.size() != bcols)
            throw std::invalid_argument("ragged block layout");

    const Field* f = nullptr;
    for (const auto& row : layout)
        for (const auto& cell : row)
            if (cell) f = &cell->field();
    if (!f) throw std::invalid_argument("block layout has no blocks");

    std::vector<std::size_t> heights(brows, 0);
    std::vector<std::size_t> widths(bcols, 0);
    std::vector<bool> hset(brows, false), wset(bcols, false);
    for (std::size_t i = 0; i < brows; ++i)
        for (std::size_t j = 0; j < bcols; ++j) {
            const auto& cell = layout[i][j];
            if (!cell) continue;
            if (cell->field() != *f)
                throw std::invalid_argument("blocks over different fields");
            if (hset[i] && heights[i] != cell->rows())
                throw std::invalid_argument("inconsistent block heights");
            if (wset[j] && widths[j] != cell->cols())
                throw std::invalid_argument("inconsistent block widths");
            heights[i] = cell->rows();
            widths[j] = cell->cols();
            hset[i] = true;
            wset[j] = true;
        }
    for (std::size_t i = 0; i < brows; ++i)
        if (!hset[i])
            throw std::invalid_argument("block row with no present block");
    for (std::size_t j = 0; j < bcols; ++j)
        if (!wset[j])
            throw std::invalid_argument("block column with no present block");

    std::size_t total_rows = 0, total_cols = 0;
    for (auto h : heights) total_rows += h;
    for (auto w : widths) total_cols += w;

    Matrix m(*f, total_rows, total_cols);
    std::size_t roff = 0;
    for (std::size_t i = 0; i < brows; ++i) {
        std::size_t coff = 0;
        for (std::size_t j = 0; j < bcols; ++j) {
            if (layout[i][j]) {
                const Matrix& b = *layout[i][j];
                for (std::size_t r = 0; r < b.rows(); ++r)
                    for (std::size_t c = 0; c < b.cols(); ++c)
                        m.at(roff + r, coff + c) = b.at(r, c);
            }
            coff += widths[j];
        }
        roff += heights[i];
    }
    return m;
}

}  // namespace lrc
