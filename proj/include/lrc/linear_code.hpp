#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc {

// [n, k] linear code. G is a full-row-rank generator; H, when present,
// is a full-row-rank parity-check with G * H^T = 0. Coordinates are
// 0-based throughout the C++ API (serialization is 1-based).
struct LinearCode {
    Field field;
    std::size_t n;
    std::size_t k;
    Matrix G;
    std::optional<Matrix> H;
};

// Validates the invariants (rank(G) = k; H orthogonal and full rank).
LinearCode make_code(Matrix G, std::optional<Matrix> H = std::nullopt);

// Code defined by parity constraints; H need not be full rank. Stores a
// row-reduced full-rank parity matrix and k = n - rank(H).
LinearCode from_parity(const Matrix& H);

// Rank of the generator columns indexed by N (0 for empty N).
std::size_t coord_rank(const LinearCode& c, const std::vector<std::size_t>& n_set);

// Restriction of the code to the coordinates N (nonempty), with the
// generator reduced to a row basis; dimension = coord_rank(N). A fresh
// parity-check is attached so distance oracles work on the result.
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& n_set);

// True iff column j of G lies in the span of the columns indexed by N.
bool span_contains(const LinearCode& c, const std::vector<std::size_t>& n_set,
                   std::size_t j);

enum class DistanceMethod { codewords, columns, lemma1 };

std::optional<DistanceMethod> distance_method_from_string(const std::string& s);
std::string to_string(DistanceMethod m);

// Exact minimum distance, or a certified lower bound when the `columns`
// search is capped: exact == false means every subset of at most `value`
// columns was independent, so d > value.
struct DistanceResult {
    std::size_t value;
    bool exact;
};

// Three independent oracles:
//   codewords - enumerate all q^k codewords (guard q^k <= 2^24);
//   columns   - smallest dependent column subset of the parity-check,
//               ascending subset size, optional cap;
//   lemma1    - smallest erasure set J with rank([n] \ J) < k (guard
//               n <= 24), i.e. n - max{|N| : rank(N) < k}.
// All reject k = 0.
DistanceResult min_distance(const LinearCode& c, DistanceMethod method,
                            std::optional<std::size_t> cap = std::nullopt);

}  // namespace lrc
