#include <doctest.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lrc/combinatorics.hpp"
#include "lrc/matrix.hpp"

using lrc::block_assemble;
using lrc::Elem;
using lrc::Field;
using lrc::Matrix;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = f.from_int(dist(rng));
    return m;
}

bool is_zero_matrix(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.field().is_zero(m.at(i, j))) return false;
    return true;
}

}  // namespace

TEST_CASE("identity, transpose and multiplication behave") {
    Field f(7, 1);
    std::mt19937_64 rng(11);
    Matrix a = random_matrix(f, 3, 4, rng);
    Matrix b = random_matrix(f, 4, 2, rng);
    Matrix ab = mat_mul(a, b);
    CHECK(ab.rows() == 3);
    CHECK(ab.cols() == 2);
    CHECK(mat_mul(identity(f, 3), a) == a);
    CHECK(mat_mul(a, identity(f, 4)) == a);
    CHECK(transpose(ab) == mat_mul(transpose(b), transpose(a)));
    CHECK(transpose(transpose(a)) == a);
    CHECK_THROWS_AS((void)mat_mul(a, a), std::invalid_argument);
}

TEST_CASE("rank and kernel are dual on random matrices") {
    std::mt19937_64 rng(42);
    for (const Field& f : {Field(2, 1), Field(5, 1), Field(2, 3), Field(37, 1)})
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
            Matrix m = random_matrix(f, rows, cols, rng);
            std::size_t rk = rank(m);
            CHECK(rk <= std::min(rows, cols));
            Matrix ker = kernel(m);
            CHECK(ker.rows() == cols - rk);
            CHECK(ker.cols() == cols);
            if (ker.rows() > 0) {
                CHECK(rank(ker) == ker.rows());
                CHECK(is_zero_matrix(mat_mul(m, transpose(ker))));
            }
        }
}

TEST_CASE("row basis spans the same space with rank rows") {
    std::mt19937_64 rng(7);
    Field f(3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(f, 2 + rng() % 4, 2 + rng() % 5, rng);
        Matrix rb = row_basis(m);
        CHECK(rb.rows() == rank(m));
        CHECK(rb.cols() == m.cols());
        CHECK(rank(rb) == rb.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::vector<Elem> row;
            for (std::size_t j = 0; j < m.cols(); ++j)
                row.push_back(m.at(i, j));
            CHECK(row_span_contains(rb, row));
        }
    }
}

TEST_CASE("column selection agrees between rank_of_columns and columns_of") {
    std::mt19937_64 rng(99);
    Field f(5, 1);
    Matrix m = random_matrix(f, 4, 6, rng);
    for (std::size_t t = 1; t <= 4; ++t)
        lrc::for_each_subset(6, t, [&](const std::vector<std::size_t>& idx) {
            CHECK(rank_of_columns(m, idx) == rank(columns_of(m, idx)));
            return false;
        });
    CHECK(rank_of_columns(m, {}) == 0);
}

TEST_CASE("submatrix extracts the right entries") {
    Field f(11, 1);
    Matrix m(f, 3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m.at(i, j) = f.from_int((i * 4 + j) % 11);
    Matrix s = submatrix(m, {0, 2}, {1, 3});
    CHECK(s.rows() == 2);
    CHECK(s.cols() == 2);
    CHECK(s.at(0, 0) == f.from_int(1));
    CHECK(s.at(0, 1) == f.from_int(3));
    CHECK(s.at(1, 0) == f.from_int(9));
    CHECK(s.at(1, 1) == f.from_int(0));  // (2,3) -> 11 % 11
    CHECK_THROWS_AS((void)submatrix(m, {3}, {0}), std::out_of_range);
}

TEST_CASE("moore matrix rank equals subfield rank of the point set") {
    Field f(2, 3);
    const Elem one = f.from_int(1), alpha = f.from_int(2);
    const Elem alpha2 = f.from_int(4);

    // {1, a, a^2} is a GF(2)-basis of GF(8): full Moore rank.
    Matrix full = moore_matrix(f, {one, alpha, alpha2}, 3, 2);
    CHECK(full.rows() == 3);
    CHECK(rank(full) == 3);
    // Entry check: row i holds x^(2^i).
    CHECK(full.at(0, 1) == alpha);
    CHECK(full.at(1, 1) == f.pow(alpha, 2));
    CHECK(full.at(2, 1) == f.pow(alpha, 4));

    // {1, a, 1+a} is GF(2)-dependent: Moore rank drops to 2.
    Matrix dep = moore_matrix(f, {one, alpha, f.from_int(3)}, 3, 2);
    CHECK(rank(dep) == 2);

    // More rows than the span never raises the rank above it.
    Matrix tall = moore_matrix(f, {one, alpha}, 3, 2);
    CHECK(rank(tall) == 2);

    CHECK_THROWS_AS((void)moore_matrix(f, {alpha, one}, 2, 2),
                    std::invalid_argument);  // unsorted
    CHECK_THROWS_AS((void)moore_matrix(f, {one}, 0, 2),
                    std::invalid_argument);  // h = 0
}

TEST_CASE("vandermonde minors are invertible on distinct points") {
    Field f(11, 1);
    std::vector<Elem> pts;
    for (std::uint64_t v = 0; v < 8; ++v) pts.push_back(f.from_int(v));
    for (std::size_t t = 1; t <= 4; ++t) {
        Matrix m = vandermonde(f, pts, t);
        CHECK(m.rows() == t);
        // Row 0 is all ones, row i is pointwise powers.
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(m.at(0, j) == f.one());
            if (t > 1) CHECK(m.at(1, j) == pts[j]);
        }
        lrc::for_each_subset(8, t, [&](const std::vector<std::size_t>& idx) {
            CHECK(rank_of_columns(m, idx) == t);
            return false;
        });
    }
    CHECK_THROWS_AS(
        (void)vandermonde(f, {f.from_int(1), f.from_int(1)}, 2),
        std::invalid_argument);  // duplicate points
}

TEST_CASE("block assembly fills absent cells with zeros") {
    Field f(5, 1);
    Matrix a(f, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            a.at(i, j) = f.from_int(i + j + 1);
    Matrix b(f, 1, 2);
    b.at(0, 0) = f.from_int(4);
    b.at(0, 1) = f.from_int(3);

    Matrix m = block_assemble({{a, std::nullopt}, {std::nullopt, b}});
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 5);
    CHECK(m.at(0, 0) == f.from_int(1));
    CHECK(m.at(1, 2) == f.from_int(4));
    CHECK(m.at(2, 3) == f.from_int(4));
    CHECK(m.at(2, 4) == f.from_int(3));
    CHECK(f.is_zero(m.at(0, 3)));
    CHECK(f.is_zero(m.at(2, 0)));

    // A block row with no present block has an undetermined height.
    CHECK_THROWS_AS(
        (void)block_assemble({{std::nullopt, std::nullopt}, {a, b}}),
        std::invalid_argument);
    // Disagreeing heights within one block row.
    Matrix c(f, 1, 3);
    CHECK_THROWS_AS((void)block_assemble({{a, c}}), std::invalid_argument);
}

TEST_CASE("row span membership") {
    Field f(2, 1);
    Matrix m(f, 2, 3);
    m.at(0, 0) = f.one();
    m.at(0, 1) = f.one();
    m.at(1, 1) = f.one();
    m.at(1, 2) = f.one();
    CHECK(row_span_contains(m, {f.one(), f.zero(), f.one()}));     // sum
    CHECK(row_span_contains(m, {f.zero(), f.zero(), f.zero()}));   // zero
    CHECK_FALSE(row_span_contains(m, {f.one(), f.zero(), f.zero()}));
}
