#pragma once

// Closed-form distance bounds for locally repairable codes with
// (r,delta)_a-locality, the slack function phi, and the regime
// classifier that maps parameter tuples to tightness/achievability
// regions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/locality.hpp"

namespace lrc {

// Slack function: with s = r+delta-1, c = a mod s and l = floor(a/s),
// phi(a,b) = 0 when c = 0, else
//   min{ s-c, max{ floor(b/2), ceil( b(b-1)(s-c) / ((l+1)l) ) } }.
// Requires a >= s (so l >= 1), delta >= 2, r >= 1.
std::uint64_t phi(std::size_t r, std::size_t delta, std::uint64_t a,
                  std::uint64_t b);

// Classical Singleton bound: n - k + 1.
std::int64_t eq1_bound(const LrcParams& p);

// Singleton-type bound with locality penalty:
//   n - k + 1 - (ceil(k/r) - 1)(delta - 1).
std::int64_t eq2_bound(const LrcParams& p);

// Sharpened bound parameterized by M = |upsilon|, the number of
// coordinates private to the deleted subfamily V1*:
//   u > M:  n-k+1 - min{ (ceil((k+ceil(r/2))/r)-1)(delta-1),
//                        M + (ceil((k+phi(n-M,u-M))/r)-1)(delta-1) }
//   u <= M: n-k+1 - (u + (ceil(k/r)-1)(delta-1)).
// May be <= 0 (no code exists with that M). Throws when
// n - M < r+delta-1.
std::int64_t improved_bound(const LrcParams& p, std::size_t M);

// Specialization to pairwise-disjoint essential covers:
//   n - k + 1 - (ceil((k+phi(n,u))/r) - 1)(delta - 1).
std::int64_t cor5_bound(const LrcParams& p);

// Tight bound in the regime m >= delta:
// applicable iff m >= delta, r > v > max{m-delta+1, floor(r/2)},
// u >= max{2(r+delta-1-m), r+delta-1}; value n-k+1-ceil(k/r)(delta-1).
bool cor7_applicable(const LrcParams& p);
std::int64_t cor7_bound(const LrcParams& p);

// Tight bound in the regime 0 < m <= delta-1:
// applicable iff 0 < m <= delta-1, r > v > floor(r/2), u >= 2r+delta-1;
// value n-k+1-ceil(k/r)(delta-1)+(delta-1-m).
bool cor8_applicable(const LrcParams& p);
std::int64_t cor8_bound(const LrcParams& p);

// Exact largest achievable distance where known:
//   n-k+1-ceil(k/r)(delta-1) + (m >= delta ? 0 : delta-1-m),
// present iff m > 0, v < r, k <= n - ceil(k/r)(delta-1),
// v > max{m-delta+1, floor(r/2)} and the case u-condition holds.
std::optional<std::int64_t> dmax_formula(const LrcParams& p);

// True iff no [n,k] linear code with (r,delta)_a-locality attains the
// eq2 bound: u > 1, 0 < m < v+delta-1, and
// min{ceil(r/2), u(u-1)(r+delta-1-m)/((w+1)w)} > r-v
// (checked in exact integer arithmetic).
bool cor10_unachievable(const LrcParams& p);

struct RegimeLabel {
    std::string leaf;
    std::vector<std::string> conditions;  // evaluated chain, all true
    std::vector<std::string> citations;
};

// Regime classifier. Leaves:
//   divisible-optimal | r-divides-k-unachievable | m-large-optimal |
//   corollary7-tight | corollary8-tight | generic-unachievable |
//   songetal-optimal-a | songetal-optimal-b |
//   westerback-unachievable-a | westerback-unachievable-b |
//   corollary10-unachievable | open-RI | open-RII
// Total and single-valued on feasible params with u >= 1; throws on
// u = 0.
RegimeLabel classify(const LrcParams& p);

struct BoundReport {
    LrcParams params;
    std::int64_t eq1 = 0;
    std::int64_t eq2 = 0;
    std::int64_t cor5 = 0;
    std::optional<std::int64_t> improved;  // present when M was supplied
    std::optional<std::size_t> M;
    bool cor7_ok = false, cor8_ok = false;
    std::optional<std::int64_t> cor7, cor8, dmax;
    bool cor10 = false;
    RegimeLabel regime;
};

BoundReport bound_report(const LrcParams& p,
                         std::optional<std::size_t> M = std::nullopt);

}  // namespace lrc
