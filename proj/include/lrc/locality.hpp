#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lrc/linear_code.hpp"

namespace lrc {

// Parameter decomposition n = w(r+delta-1) + m with 0 <= m < r+delta-1
// and k = ur + v with 0 < v <= r (so v = r exactly when r divides k).
struct LrcParams {
    std::size_t n = 0, k = 0, r = 0, delta = 0;
    std::size_t w = 0, m = 0, u = 0, v = 0;

    std::size_t s() const { return r + delta - 1; }
    // The decomposition exists for any valid (n,k,r,delta); these two
    // extra conditions are needed for a code with full locality to exist.
    bool feasible() const { return w >= u && n >= r + delta - 1; }
};

// Requires n > k >= r >= 1 and delta >= 2.
LrcParams decompose(std::size_t n, std::size_t k, std::size_t r,
                    std::size_t delta);

// Ordered family of coordinate subsets of [n]; coordinates 0-based and
// sorted ascending within each block.
struct RepairFamily {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> blocks;
};

bool covers_all(const RepairFamily& fam);
// Smallest coordinate not covered by any block, if one exists.
std::optional<std::size_t> first_uncovered(const RepairFamily& fam);
// Cover + every block size <= block_cap + no redundant block.
bool is_ecf(const RepairFamily& fam, std::size_t block_cap);

// True iff |S| <= r+delta-1 and the punctured code on S has minimum
// distance >= delta (rank-0 column sets pass trivially).
bool is_repair_set(const LinearCode& c, const std::vector<std::size_t>& s,
                   std::size_t r, std::size_t delta);

// Every repair set of size <= r+delta-1, sorted lexicographically.
// Guard: C(n, r+delta-1) <= 10^7.
RepairFamily all_repair_sets(const LinearCode& c, std::size_t r,
                             std::size_t delta);

// Removes redundant blocks (greedy, trying the last block first) until
// the family is an essential cover of [n]. Pass the code dimension k to
// enable the |family| >= ceil(k/r) check (k = 0 skips it; it is valid
// only when the family spans rank k).
RepairFamily extract_ecf(const RepairFamily& fam, std::size_t k,
                         std::size_t r);

// Sum of block sizes minus the size of the union; 0 iff pairwise disjoint.
std::size_t overlap(const std::vector<std::vector<std::size_t>>& blocks);

// C1: every block meets the union of the others in fewer than
// |S_i| - delta + 1 coordinates. C2: every pair meets in fewer than
// min(|S_i|, |S_j|) - delta + 1. C3 is the complement of C2.
bool condition_c1(const std::vector<std::vector<std::size_t>>& blocks,
                  std::size_t delta);
bool condition_c2(const std::vector<std::vector<std::size_t>>& blocks,
                  std::size_t delta);
bool condition_c3(const std::vector<std::vector<std::size_t>>& blocks,
                  std::size_t delta);

// A t-subset (as indices into `blocks`) whose padded slack
// t(r+delta-1) - |union| is maximal; guaranteed >= phi(a, t) where a is
// the ground-set size the family covers. Exhaustive when feasible, then
// an averaging-window scan, then seeded random sampling.
std::vector<std::size_t> find_overlap_subset(
    const std::vector<std::vector<std::size_t>>& blocks, std::size_t t,
    std::size_t r, std::size_t delta, std::size_t a);
std::vector<std::size_t> find_overlap_subset(const RepairFamily& fam,
                                             std::size_t t,
                                             const LrcParams& p);

// Output of the two scanning loops that break Condition C3: after the
// run, the family minus V1 satisfies C2, and every block of V1 \ V1'
// has its span inside the span of a block that stayed.
struct Breakup {
    std::vector<std::size_t> v1;        // indices into the family, sorted
    std::vector<std::size_t> v1_prime;  // subset of v1
    std::size_t delta = 2;              // tolerance the run was made with
};

// Deterministic variant: both loops always pick the qualifying pair
// with smallest i, then smallest j.
Breakup break_condition_c3(const RepairFamily& fam, std::size_t delta);

// All distinct outcomes over every execution order of the two loops.
// Exponential; guarded to families with at most 6 blocks.
std::vector<Breakup> enumerate_breakups(const RepairFamily& fam,
                                        std::size_t delta);

struct BreakupExtension {
    std::vector<std::size_t> v1, v1_prime, v1_star;  // family indices
    std::vector<std::size_t> upsilon;                // coordinates
    std::size_t M = 0;                               // |upsilon|
};

// Grows V1' to V1* (greedy, index order) keeping
// rank(union V1) = rank(union (V1 \ V1*)) with every remaining block
// contributing rank strictly; computes the private coordinates
// upsilon = union(V1*) \ union(family \ V1*) and M.
BreakupExtension extend_breakup(const LinearCode& c, const RepairFamily& fam,
                                const Breakup& b);

// For a family satisfying C2 but not C1: a C1 subfamily (indices into
// `blocks`) whose padded slack is at least ceil(r/2).
std::vector<std::size_t> find_c1_subfamily(
    const std::vector<std::vector<std::size_t>>& blocks, std::size_t r,
    std::size_t delta);

// Constructive core of the distance bound: starting from a C1 family
// v1 (indices into `family`) with |v1| <= u and padded slack >=
// delta_slack, grows the family by rank-increasing blocks to
// ceil((k+delta_slack)/r) - 1 blocks, then greedily adds coordinates of
// `universe` while the rank stays below k. Returns S with
// rank(S) = k-1 and |S| >= k-1 + (ceil((k+delta_slack)/r)-1)(delta-1).
std::vector<std::size_t> find_low_rank_set(
    const LinearCode& c, const std::vector<std::vector<std::size_t>>& family,
    const std::vector<std::size_t>& v1, std::size_t delta_slack,
    const LrcParams& p, const std::vector<std::size_t>& universe);

struct BoundWitness {
    std::vector<std::size_t> s;  // coordinates with rank exactly k-1
    std::size_t M = 0;
    std::string case_label;       // "u>M:C1", "u>M:C2-not-C1", "u<=M"
    std::size_t size_guarantee = 0;  // proven lower bound on |s|
    std::size_t distance_bound = 0;  // n - |s|, an upper bound on d
};

// Full pipeline: enumerate repair sets, extract an essential cover,
// break C3, extend to V1*, and run the case analysis; the returned set
// certifies d <= n - |s| for the code.
BoundWitness bound_witness(const LinearCode& c, std::size_t r,
                           std::size_t delta);

}  // namespace lrc
