#pragma once

// Explicit optimal-code generation: MDS parity blocks, t-wise
// independent point sets, the two block-diagonal-plus-Moore parity
// constructions (variants A and B), and end-to-end verification.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lrc/linear_code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

struct ConstructionPlan {
    char variant = 'A';  // 'A' or 'B'
    LrcParams params;
    std::uint64_t q = 0;  // prime base-field size
    unsigned e = 1;       // extension degree; the code lives in GF(q^e)
    std::size_t h = 0;    // number of Moore rows
    std::size_t t = 0;    // required independence level of the point set
    std::size_t predicted_distance = 0;  // h + (w-u)(delta-1) + 1
};

// Validates every invariant of the requested variant and fills the
// derived quantities (n, k, h, t, predicted distance). Throws
// std::invalid_argument naming the violated invariant.
ConstructionPlan make_plan(char variant, std::size_t r, std::size_t delta,
                           std::size_t m, std::size_t u, std::size_t v,
                           std::size_t w, std::uint64_t q, unsigned e);

// (dist-1) x len Vandermonde matrix on the points 0..len-1 of GF(q):
// the parity-check matrix of a [len, len-dist+1, dist] MDS code.
// Requires 1 <= dist <= len and q >= len.
Matrix mds_parity(std::size_t len, std::size_t dist, std::uint64_t q);

// Splits a (delta-1) x (r+delta-1) matrix into its first r+delta-2
// columns and its last column.
std::pair<Matrix, Matrix> split_a1(const Matrix& a);

// n elements of GF(q^e), any t of which are linearly independent over
// GF(q): columns of the t-row Vandermonde matrix on n distinct GF(q)
// points, lifted coordinate-wise and sorted by element_order_key.
// Requires q prime, q >= n, e >= t. Independence is re-verified on all
// C(n,t) subsets when that count is at most 10^7, else on 10^5 sampled
// subsets.
std::vector<Elem> twise_independent_set(std::size_t n, std::size_t t,
                                        std::uint64_t q, unsigned e);

// Randomized fallback for q < n: samples candidate elements and keeps
// one only if independence with every (t-1)-subset of the kept prefix
// survives; full verification before returning.
std::vector<Elem> twise_independent_set_random(std::size_t n, std::size_t t,
                                               std::uint64_t q, unsigned e,
                                               std::uint64_t seed);

// Variant A: w+1 diagonal MDS parity blocks (the first r+delta-1-m of
// width r+delta-2, the rest of width r+delta-1) over h Moore rows.
LinearCode construction_a(const ConstructionPlan& plan);

// Variant B: one wide diagonal block (width m+r+delta-1, parity of an
// MDS code with distance m+delta) then w-1 blocks of width r+delta-1,
// over h Moore rows.
LinearCode construction_b(const ConstructionPlan& plan);

LinearCode construct(const ConstructionPlan& plan);

// The designed repair sets (0-based coordinates) that certify
// (r,delta)_a-locality of the constructed code.
std::vector<std::vector<std::size_t>> plan_blocks(const ConstructionPlan& p);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool ok() const;
};

// Checks, in order: the dimension matches the plan, the designed
// blocks cover every coordinate, each designed block is an
// (r,delta)-repair set, the minimum distance equals the predicted
// value exactly (columns method, capped), and the predicted value
// equals the closed-form tight bound for the variant.
VerifyReport verify_optimal(const LinearCode& c, const ConstructionPlan& plan);

}  // namespace lrc
