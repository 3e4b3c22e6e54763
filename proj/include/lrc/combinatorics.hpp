#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lrc {

// Visits every size-t subset of {0, ..., n-1} in lexicographic order.
// The visitor may return true to stop early; the function then returns
// true. Visits the empty subset once when t == 0.
inline bool for_each_subset(
    std::size_t n, std::size_t t,
    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (t > n) return false;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        if (visit(idx)) return true;
        if (t == 0) return false;
        // Advance the rightmost index that can still move.
        std::size_t i = t;
        while (i > 0) {
            --i;
            if (idx[i] + (t - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

// Binomial coefficient, saturating at `cap` to avoid overflow; used for
// enumeration guards.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t t,
                                     std::uint64_t cap) {
    if (t > n) return 0;
    if (t > n - t) t = n - t;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= t; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - t + i) / i;
    }
    return result > cap ? cap + 1 : result;
}

}  // namespace lrc
