#include "lrc/locality.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>

#include "lrc/bounds.hpp"
#include "lrc/combinatorics.hpp"

namespace lrc {
namespace {

using Block = std::vector<std::size_t>;

Block sorted_set(Block v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Block union_of(const std::vector<Block>& blocks,
               const std::vector<std::size_t>& idx) {
    Block u;
    for (auto i : idx)
        u.insert(u.end(), blocks[i].begin(), blocks[i].end());
    return sorted_set(std::move(u));
}

Block union_merge(const Block& a, const Block& b) {
    Block u;
    u.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(u));
    return u;
}

std::size_t intersect_size(const Block& a, const Block& b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

std::int64_t si(std::size_t x) { return static_cast<std::int64_t>(x); }

void check_block_range(const Block& b, std::size_t n) {
    for (auto x : b)
        if (x >= n) throw std::out_of_range("coordinate out of range");
}

}  // namespace

LrcParams decompose(std::size_t n, std::size_t k, std::size_t r,
                    std::size_t delta) {
    if (delta < 2)
        throw std::invalid_argument("infeasible parameters: delta must be >= 2");
    if (r < 1 || r > k)
        throw std::invalid_argument("infeasible parameters: need 1 <= r <= k");
    if (k >= n)
        throw std::invalid_argument("infeasible parameters: need k < n");
    LrcParams p;
    p.n = n; p.k = k; p.r = r; p.delta = delta;
    const std::size_t s = r + delta - 1;
    p.w = n / s;
    p.m = n % s;
    p.u = (k + r - 1) / r - 1;
    p.v = k - p.u * r;
    return p;
}

bool covers_all(const RepairFamily& fam) {
    return !first_uncovered(fam).has_value();
}

std::optional<std::size_t> first_uncovered(const RepairFamily& fam) {
    std::vector<bool> seen(fam.n, false);
    for (const auto& b : fam.blocks) {
        check_block_range(b, fam.n);
        for (auto x : b) seen[x] = true;
    }
    for (std::size_t i = 0; i < fam.n; ++i)
        if (!seen[i]) return i;
    return std::nullopt;
}

bool is_ecf(const RepairFamily& fam, std::size_t block_cap) {
    if (!covers_all(fam)) return false;
    for (const auto& b : fam.blocks)
        if (b.size() > block_cap) return false;
    for (std::size_t skip = 0; skip < fam.blocks.size(); ++skip) {
        std::vector<bool> seen(fam.n, false);
        for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
            if (i == skip) continue;
            for (auto x : fam.blocks[i]) seen[x] = true;
        }
        bool redundant = true;
        for (std::size_t x = 0; x < fam.n; ++x)
            if (!seen[x]) { redundant = false; break; }
        if (redundant) return false;
    }
    return true;
}

bool is_repair_set(const LinearCode& c, const std::vector<std::size_t>& s,
                   std::size_t r, std::size_t delta) {
    if (s.empty())
        throw std::invalid_argument("repair set must be nonempty");
    check_block_range(s, c.n);
    Block set = sorted_set(s);
    if (set.size() > r + delta - 1) return false;
    if (coord_rank(c, set) == 0) return true;  // all-zero columns
    LinearCode sub = puncture(c, set);
    DistanceResult d = min_distance(sub, DistanceMethod::columns, delta - 1);
    return !d.exact || d.value >= delta;
}

RepairFamily all_repair_sets(const LinearCode& c, std::size_t r,
                             std::size_t delta) {
    const std::size_t cap = std::min(r + delta - 1, c.n);
    if (binomial_capped(c.n, cap, 10'000'000) > 10'000'000)
        throw std::invalid_argument(
            "repair-set enumeration guard exceeded (C(n, r+delta-1) > 10^7)");
    RepairFamily fam;
    fam.n = c.n;
    for (std::size_t t = 1; t <= cap; ++t) {
        for_each_subset(c.n, t, [&](const std::vector<std::size_t>& idx) {
            if (is_repair_set(c, idx, r, delta)) fam.blocks.push_back(idx);
            return false;
        });
    }
    std::sort(fam.blocks.begin(), fam.blocks.end());
    return fam;
}

RepairFamily extract_ecf(const RepairFamily& fam, std::size_t k,
                         std::size_t r) {
    if (!covers_all(fam))
        throw std::invalid_argument("family does not cover every coordinate");
    std::vector<bool> kept(fam.blocks.size(), true);
    // Try dropping the last block first; this keeps low-index blocks.
    for (std::size_t rev = fam.blocks.size(); rev-- > 0;) {
        std::vector<bool> seen(fam.n, false);
        for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
            if (!kept[i] || i == rev) continue;
            for (auto x : fam.blocks[i]) seen[x] = true;
        }
        bool covered = true;
        for (std::size_t x = 0; x < fam.n; ++x)
            if (!seen[x]) { covered = false; break; }
        if (covered) kept[rev] = false;
    }
    RepairFamily out;
    out.n = fam.n;
    for (std::size_t i = 0; i < fam.blocks.size(); ++i)
        if (kept[i]) out.blocks.push_back(fam.blocks[i]);
    if (k > 0 && r > 0 && out.blocks.size() < (k + r - 1) / r)
        throw std::logic_error(
            "essential family smaller than ceil(k/r); family cannot span rank k");
    return out;
}

std::size_t overlap(const std::vector<std::vector<std::size_t>>& blocks) {
    std::size_t total = 0;
    Block all;
    for (const auto& b : blocks) {
        total += b.size();
        all.insert(all.end(), b.begin(), b.end());
    }
    return total - sorted_set(std::move(all)).size();
}

bool condition_c1(const std::vector<std::vector<std::size_t>>& blocks,
                  std::size_t delta) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Block others;
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (j != i)
                others.insert(others.end(), blocks[j].begin(), blocks[j].end());
        others = sorted_set(std::move(others));
        if (si(intersect_size(blocks[i], others)) >=
            si(blocks[i].size()) - si(delta) + 1)
            return false;
    }
    return true;
}

bool condition_c2(const std::vector<std::vector<std::size_t>>& blocks,
                  std::size_t delta) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            std::int64_t bound =
                std::min(si(blocks[i].size()), si(blocks[j].size())) -
                si(delta) + 1;
            if (si(intersect_size(blocks[i], blocks[j])) >= bound)
                return false;
        }
    return true;
}

bool condition_c3(const std::vector<std::vector<std::size_t>>& blocks,
                  std::size_t delta) {
    return !condition_c2(blocks, delta);
}

std::vector<std::size_t> find_overlap_subset(
    const std::vector<std::vector<std::size_t>>& blocks, std::size_t t,
    std::size_t r, std::size_t delta, std::size_t a) {
    if (t > blocks.size())
        throw std::invalid_argument("subset size exceeds family size");
    const std::size_t s = r + delta - 1;
    const std::uint64_t target = phi(r, delta, a, t);

    std::int64_t best_slack = -1;
    std::vector<std::size_t> best;
    auto consider = [&](const std::vector<std::size_t>& idx) {
        std::int64_t slack =
            si(t * s) - si(union_of(blocks, idx).size());
        if (slack > best_slack) {
            best_slack = slack;
            best = idx;
        }
    };

    constexpr std::uint64_t kSearchGuard = 1'000'000;
    if (binomial_capped(blocks.size(), t, kSearchGuard) <= kSearchGuard) {
        for_each_subset(blocks.size(), t,
                        [&](const std::vector<std::size_t>& idx) {
                            consider(idx);
                            return false;
                        });
    } else {
        // Averaging window: the existence proof only needs the first
        // w+1 blocks of a uniform cover; scan those if feasible.
        const std::size_t pool = std::min(blocks.size(), a / s + 1);
        if (pool >= t &&
            binomial_capped(pool, t, kSearchGuard) <= kSearchGuard) {
            for_each_subset(pool, t,
                            [&](const std::vector<std::size_t>& idx) {
                                consider(idx);
                                return false;
                            });
        } else {
            std::mt19937_64 rng(0x5eed);  // fixed seed: reproducible
            std::vector<std::size_t> all(blocks.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            for (std::size_t iter = 0; iter < kSearchGuard; ++iter) {
                for (std::size_t i = 0; i < t; ++i) {
                    std::uniform_int_distribution<std::size_t> pick(
                        i, all.size() - 1);
                    std::swap(all[i], all[pick(rng)]);
                }
                std::vector<std::size_t> idx(all.begin(), all.begin() + t);
                std::sort(idx.begin(), idx.end());
                consider(idx);
            }
        }
    }
    if (best_slack < si(target))
        throw std::logic_error(
            "overlap-subset slack guarantee violated; this is a bug");
    return best;
}

std::vector<std::size_t> find_overlap_subset(const RepairFamily& fam,
                                             std::size_t t,
                                             const LrcParams& p) {
    return find_overlap_subset(fam.blocks, t, p.r, p.delta, fam.n);
}

namespace {

bool breakup_pair_qualifies(const std::vector<Block>& blocks, std::size_t i,
                            std::size_t j, std::size_t delta) {
    return i != j && si(intersect_size(blocks[i], blocks[j])) >=
                         si(blocks[i].size()) - si(delta) + 1;
}

}  // namespace

Breakup break_condition_c3(const RepairFamily& fam, std::size_t delta) {
    const auto& blocks = fam.blocks;
    const std::size_t B = blocks.size();
    std::vector<bool> in_v1(B, false), in_v1p(B, false);

    bool fired = true;
    while (fired) {  // loop 1: S_i outside V1, S_j anywhere
        fired = false;
        for (std::size_t i = 0; i < B && !fired; ++i) {
            if (in_v1[i]) continue;
            for (std::size_t j = 0; j < B && !fired; ++j) {
                if (!breakup_pair_qualifies(blocks, i, j, delta)) continue;
                in_v1[i] = in_v1[j] = true;
                in_v1p[i] = true;
                fired = true;
            }
        }
    }
    fired = true;
    while (fired) {  // loop 2: S_i in V1 \ V1', S_j outside V1
        fired = false;
        for (std::size_t i = 0; i < B && !fired; ++i) {
            if (!in_v1[i] || in_v1p[i]) continue;
            for (std::size_t j = 0; j < B && !fired; ++j) {
                if (in_v1[j]) continue;
                if (!breakup_pair_qualifies(blocks, i, j, delta)) continue;
                in_v1[j] = true;
                in_v1p[i] = true;
                fired = true;
            }
        }
    }

    Breakup out;
    out.delta = delta;
    std::vector<Block> rest;
    for (std::size_t i = 0; i < B; ++i) {
        if (in_v1[i]) out.v1.push_back(i);
        if (in_v1p[i]) out.v1_prime.push_back(i);
        if (!in_v1[i]) rest.push_back(blocks[i]);
    }
    if (!condition_c2(rest, delta))
        throw std::logic_error(
            "family minus V1 fails C2 after the breakup; this is a bug");
    return out;
}

std::vector<Breakup> enumerate_breakups(const RepairFamily& fam,
                                        std::size_t delta) {
    const auto& blocks = fam.blocks;
    const std::size_t B = blocks.size();
    if (B > 6)
        throw std::invalid_argument(
            "breakup enumeration limited to families of at most 6 blocks");

    std::set<std::tuple<unsigned, unsigned, int>> visited;
    std::set<std::pair<unsigned, unsigned>> outcomes;

    auto dfs = [&](auto&& self, unsigned v1, unsigned v1p, int phase) -> void {
        if (!visited.insert({v1, v1p, phase}).second) return;
        bool any = false;
        if (phase == 1) {
            for (std::size_t i = 0; i < B; ++i) {
                if (v1 >> i & 1) continue;
                for (std::size_t j = 0; j < B; ++j) {
                    if (!breakup_pair_qualifies(blocks, i, j, delta)) continue;
                    any = true;
                    self(self, v1 | 1u << i | 1u << j, v1p | 1u << i, 1);
                }
            }
            if (!any) self(self, v1, v1p, 2);
        } else {
            for (std::size_t i = 0; i < B; ++i) {
                if (!(v1 >> i & 1) || (v1p >> i & 1)) continue;
                for (std::size_t j = 0; j < B; ++j) {
                    if (v1 >> j & 1) continue;
                    if (!breakup_pair_qualifies(blocks, i, j, delta)) continue;
                    any = true;
                    self(self, v1 | 1u << j, v1p | 1u << i, 2);
                }
            }
            if (!any) outcomes.insert({v1, v1p});
        }
    };
    dfs(dfs, 0, 0, 1);

    std::vector<Breakup> result;
    for (const auto& [v1, v1p] : outcomes) {
        Breakup b;
        b.delta = delta;
        for (std::size_t i = 0; i < B; ++i) {
            if (v1 >> i & 1) b.v1.push_back(i);
            if (v1p >> i & 1) b.v1_prime.push_back(i);
        }
        result.push_back(std::move(b));
    }
    return result;
}

BreakupExtension extend_breakup(const LinearCode& c, const RepairFamily& fam,
                                const Breakup& b) {
    if (fam.n != c.n)
        throw std::invalid_argument("family and code lengths differ");
    const auto& blocks = fam.blocks;
    for (auto i : b.v1)
        if (i >= blocks.size())
            throw std::invalid_argument("breakup index out of range");
    for (auto i : b.v1_prime)
        if (!std::binary_search(b.v1.begin(), b.v1.end(), i))
            throw std::invalid_argument("V1' must be a subset of V1");

    const std::size_t rank_v1 = coord_rank(c, union_of(blocks, b.v1));
    std::set<std::size_t> star(b.v1_prime.begin(), b.v1_prime.end());
    auto rest_of = [&](const std::set<std::size_t>& excluded) {
        std::vector<std::size_t> rest;
        for (auto i : b.v1)
            if (!excluded.count(i)) rest.push_back(i);
        return rest;
    };
    // Greedy maximal extension: move a block into V1* whenever the rest
    // still spans the same rank.
    for (auto i : b.v1) {
        if (star.count(i)) continue;
        std::set<std::size_t> trial = star;
        trial.insert(i);
        if (coord_rank(c, union_of(blocks, rest_of(trial))) == rank_v1)
            star = std::move(trial);
    }

    auto rest = rest_of(star);
    for (auto i : rest) {
        std::set<std::size_t> trial = star;
        trial.insert(i);
        if (coord_rank(c, union_of(blocks, rest_of(trial))) == rank_v1)
            throw std::logic_error(
                "V1* extension not maximal; this is a bug");
    }
    // upsilon = coordinates private to the V1* blocks.
    Block star_union, others_union;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& target = star.count(i) ? star_union : others_union;
        target.insert(target.end(), blocks[i].begin(), blocks[i].end());
    }
    star_union = sorted_set(std::move(star_union));
    others_union = sorted_set(std::move(others_union));
    Block upsilon;
    std::set_difference(star_union.begin(), star_union.end(),
                        others_union.begin(), others_union.end(),
                        std::back_inserter(upsilon));

    BreakupExtension out;
    out.v1 = b.v1;
    out.v1_prime = b.v1_prime;
    out.v1_star.assign(star.begin(), star.end());
    out.upsilon = upsilon;
    out.M = upsilon.size();

    // The structural guarantees below are theorems only when the family
    // is an essential cover of genuine repair sets; skip them for
    // free-form block families (non-essential covers can have private
    // coordinates nowhere and still a nonempty V1*).
    if (is_ecf(fam, fam.n)) {
        if (coord_rank(c, union_of(blocks, rest)) != rank_v1)
            throw std::logic_error("V1* extension lost rank; this is a bug");
        std::vector<Block> rest_blocks;
        for (auto i : rest) rest_blocks.push_back(blocks[i]);
        if (!condition_c1(rest_blocks, b.delta))
            throw std::logic_error("V1 minus V1* fails C1; this is a bug");
        if (out.v1_star.size() > out.M || rest.size() > out.M ||
            out.v1.size() > 2 * out.M)
            throw std::logic_error(
                "breakup cardinality bounds violated; this is a bug");
        Block rest_union = union_of(blocks, rest);
        for (auto coord : upsilon)
            if (!span_contains(c, rest_union, coord))
                throw std::logic_error(
                    "private coordinate outside span of V1 minus V1*; "
                    "this is a bug");
    }
    return out;
}

std::vector<std::size_t> find_c1_subfamily(
    const std::vector<std::vector<std::size_t>>& blocks, std::size_t r,
    std::size_t delta) {
    if (!condition_c2(blocks, delta) || condition_c1(blocks, delta))
        throw std::invalid_argument(
            "witness search needs a family satisfying C2 but not C1");
    const std::size_t B = blocks.size();

    std::size_t best_i = B, best_size = static_cast<std::size_t>(-1);
    std::vector<std::size_t> best_t;
    for (std::size_t i = 0; i < B; ++i) {
        Block others;
        for (std::size_t j = 0; j < B; ++j)
            if (j != i)
                others.insert(others.end(), blocks[j].begin(),
                              blocks[j].end());
        others = sorted_set(std::move(others));
        const std::int64_t need = si(blocks[i].size()) - si(delta) + 1;
        if (si(intersect_size(blocks[i], others)) < need) continue;

        std::vector<std::size_t> candidates;
        for (std::size_t j = 0; j < B; ++j)
            if (j != i && intersect_size(blocks[i], blocks[j]) > 0)
                candidates.push_back(j);
        // Smallest witness has at least 2 blocks besides S_i under C2.
        for (std::size_t tsz = 2; tsz <= candidates.size(); ++tsz) {
            if (tsz + 1 >= best_size) break;
            if (binomial_capped(candidates.size(), tsz, 1'000'000) >
                1'000'000)
                throw std::logic_error(
                    "witness subfamily search too large; this is a bug");
            std::vector<std::size_t> found;
            for_each_subset(
                candidates.size(), tsz,
                [&](const std::vector<std::size_t>& pick) {
                    Block uni;
                    for (auto p : pick) {
                        const auto& blk = blocks[candidates[p]];
                        uni.insert(uni.end(), blk.begin(), blk.end());
                    }
                    uni = sorted_set(std::move(uni));
                    if (si(intersect_size(blocks[i], uni)) >= need) {
                        found.clear();
                        for (auto p : pick) found.push_back(candidates[p]);
                        return true;
                    }
                    return false;
                });
            if (!found.empty()) {
                best_size = tsz + 1;
                best_i = i;
                best_t = found;
                break;
            }
        }
    }
    if (best_i == B)
        throw std::logic_error("no witness subfamily found; this is a bug");

    const std::size_t tau = best_i;
    const std::int64_t need = si(blocks[tau].size()) - si(delta) + 1;
    // A single partner covering half the required intersection gives a
    // two-block witness; otherwise drop one partner from the family.
    for (auto t : best_t) {
        if (2 * si(intersect_size(blocks[tau], blocks[t])) >= need) {
            std::vector<std::size_t> out = {t, tau};
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    std::vector<std::size_t> out = {tau};
    out.insert(out.end(), best_t.begin() + 1, best_t.end());
    std::sort(out.begin(), out.end());

    std::vector<Block> out_blocks;
    for (auto i : out) out_blocks.push_back(blocks[i]);
    const std::int64_t slack =
        si(out.size() * (r + delta - 1)) - si(union_of(blocks, out).size());
    if (!condition_c1(out_blocks, delta) || slack < si((r + 1) / 2))
        throw std::logic_error(
            "C1 witness guarantees violated; this is a bug");
    return out;
}

std::vector<std::size_t> find_low_rank_set(
    const LinearCode& c, const std::vector<std::vector<std::size_t>>& family,
    const std::vector<std::size_t>& v1, std::size_t delta_slack,
    const LrcParams& p, const std::vector<std::size_t>& universe) {
    for (const auto& blk : family)
        for (auto x : blk)
            if (!std::binary_search(universe.begin(), universe.end(), x))
                throw std::invalid_argument("family block outside universe");
    for (auto i : v1)
        if (i >= family.size())
            throw std::invalid_argument("initial family index out of range");

    std::vector<Block> v1_blocks;
    for (auto i : v1) v1_blocks.push_back(family[i]);
    if (!condition_c1(v1_blocks, p.delta))
        throw std::invalid_argument("initial family must satisfy C1");
    if (v1.size() > p.u)
        throw std::invalid_argument("initial family larger than u");
    Block cur = union_of(family, v1);
    if (si(v1.size() * p.s()) - si(cur.size()) < si(delta_slack))
        throw std::invalid_argument("initial family slack below target");

    const std::size_t target_blocks =
        (p.k + delta_slack + p.r - 1) / p.r - 1;
    std::size_t cur_rank = coord_rank(c, cur);
    std::set<std::size_t> selected(v1.begin(), v1.end());

    auto check_invariant = [&]() {
        if (si(cur_rank) >
            si(cur.size()) - si(selected.size()) * (si(p.delta) - 1))
            throw std::logic_error(
                "rank/size invariant violated while growing the family; "
                "this is a bug");
    };
    check_invariant();

    while (selected.size() < target_blocks) {
        bool grew = false;
        for (std::size_t tau = 0; tau < family.size() && !grew; ++tau) {
            if (selected.count(tau)) continue;
            Block next = union_merge(cur, family[tau]);
            std::size_t next_rank = coord_rank(c, next);
            if (next_rank <= cur_rank) continue;
            if (si(intersect_size(family[tau], cur)) >=
                si(family[tau].size()) - si(p.delta) + 1)
                throw std::logic_error(
                    "rank-increasing block with large overlap; this is a bug");
            cur = std::move(next);
            cur_rank = next_rank;
            selected.insert(tau);
            grew = true;
        }
        if (!grew)
            throw std::logic_error(
                "no rank-increasing repair set available; this is a bug");
        check_invariant();
    }

    // Coordinate extension: keep the rank at most k-1; a full pass ends
    // with rank exactly k-1.
    for (auto j : universe) {
        if (std::binary_search(cur.begin(), cur.end(), j)) continue;
        if (cur_rank < c.k - 1) {
            cur.insert(std::lower_bound(cur.begin(), cur.end(), j), j);
            cur_rank = coord_rank(c, cur);
        } else {
            Block trial = cur;
            trial.insert(std::lower_bound(trial.begin(), trial.end(), j), j);
            if (coord_rank(c, trial) <= c.k - 1) cur = std::move(trial);
        }
    }
    cur_rank = coord_rank(c, cur);
    if (cur_rank != c.k - 1)
        throw std::logic_error("rank target not reached; this is a bug");
    if (cur.size() < c.k - 1 + target_blocks * (p.delta - 1))
        throw std::logic_error("witness set below size guarantee; this is a bug");
    return cur;
}

BoundWitness bound_witness(const LinearCode& c, std::size_t r,
                           std::size_t delta) {
    LrcParams p = decompose(c.n, c.k, r, delta);
    RepairFamily gamma = all_repair_sets(c, r, delta);
    if (auto miss = first_uncovered(gamma))
        throw std::invalid_argument("no repair set covers coordinate " +
                                    std::to_string(*miss + 1));
    RepairFamily fam = extract_ecf(gamma, c.k, r);

    Breakup bk = break_condition_c3(fam, delta);
    BreakupExtension ext = extend_breakup(c, fam, bk);
    const std::size_t M = ext.M;

    if (c.n - M < p.s())
        throw std::logic_error(
            "surviving coordinate set shorter than one block; "
            "impossible for k >= r");

    // The family without V1* and its ground set N = [n] \ upsilon.
    std::vector<bool> in_star(fam.blocks.size(), false);
    for (auto i : ext.v1_star) in_star[i] = true;
    std::vector<Block> star_rest_blocks;
    std::vector<std::size_t> star_rest_to_full;
    for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
        if (in_star[i]) continue;
        star_rest_blocks.push_back(fam.blocks[i]);
        star_rest_to_full.push_back(i);
    }
    std::vector<std::size_t> pos_of_full(fam.blocks.size(),
                                         static_cast<std::size_t>(-1));
    for (std::size_t pos = 0; pos < star_rest_to_full.size(); ++pos)
        pos_of_full[star_rest_to_full[pos]] = pos;

    std::vector<std::size_t> v1_minus_star;
    for (auto i : ext.v1)
        if (!in_star[i]) v1_minus_star.push_back(i);

    Block big_n;
    {
        std::vector<bool> gone(c.n, false);
        for (auto x : ext.upsilon) gone[x] = true;
        for (std::size_t x = 0; x < c.n; ++x)
            if (!gone[x]) big_n.push_back(x);
    }

    BoundWitness out;
    out.M = M;

    if (p.u > M) {
        std::vector<std::size_t> v2 = find_overlap_subset(
            star_rest_blocks, p.u - M, r, delta, c.n - M);
        std::vector<std::size_t> v3 = v2;
        for (auto i : v1_minus_star) v3.push_back(pos_of_full[i]);
        v3 = sorted_set(std::move(v3));
        std::vector<Block> v3_blocks;
        for (auto i : v3) v3_blocks.push_back(star_rest_blocks[i]);

        if (condition_c1(v3_blocks, delta)) {
            const std::size_t slack = phi(r, delta, c.n - M, p.u - M);
            Block s1 = find_low_rank_set(c, star_rest_blocks, v3, slack, p,
                                         big_n);
            out.s = union_merge(s1, ext.upsilon);
            const std::size_t t_blocks =
                (c.k + slack + r - 1) / r - 1;
            out.size_guarantee = M + c.k - 1 + t_blocks * (delta - 1);
            out.case_label = "u>M:C1";
        } else {
            if (!condition_c2(v3_blocks, delta))
                throw std::logic_error(
                    "candidate family fails C2; this is a bug");
            std::vector<std::size_t> v3s_local =
                find_c1_subfamily(v3_blocks, r, delta);
            std::vector<std::size_t> v3s_full;
            for (auto i : v3s_local)
                v3s_full.push_back(star_rest_to_full[v3[i]]);
            const std::size_t half_r = (r + 1) / 2;
            Block all_coords(c.n);
            for (std::size_t x = 0; x < c.n; ++x) all_coords[x] = x;
            out.s = find_low_rank_set(c, fam.blocks, v3s_full, half_r, p,
                                      all_coords);
            const std::size_t t_blocks = (c.k + half_r + r - 1) / r - 1;
            out.size_guarantee = c.k - 1 + t_blocks * (delta - 1);
            out.case_label = "u>M:C2-not-C1";
        }
    } else {
        const std::size_t take = std::min(p.u, v1_minus_star.size());
        std::vector<std::size_t> v4;
        for (std::size_t i = 0; i < take; ++i)
            v4.push_back(pos_of_full[v1_minus_star[i]]);
        std::sort(v4.begin(), v4.end());
        Block s2 = find_low_rank_set(c, star_rest_blocks, v4, 0, p, big_n);

        Block v4_union = union_of(star_rest_blocks, v4);
        Block ups_prime;
        for (auto coord : ext.upsilon)
            if (span_contains(c, v4_union, coord)) ups_prime.push_back(coord);
        if (ups_prime.size() < p.u)
            throw std::logic_error(
                "not enough private coordinates in span; this is a bug");
        out.s = union_merge(s2, ups_prime);
        out.size_guarantee = p.u + c.k - 1 + p.u * (delta - 1);
        out.case_label = "u<=M";
    }

    if (coord_rank(c, out.s) != c.k - 1)
        throw std::logic_error("witness rank is not k-1; this is a bug");
    if (out.s.size() < out.size_guarantee)
        throw std::logic_error(
            "witness smaller than its case guarantee; this is a bug");
    out.distance_bound = c.n - out.s.size();
    return out;
}

}  // namespace lrc
