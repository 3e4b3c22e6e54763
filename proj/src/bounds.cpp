#include "lrc/bounds.hpp"

#include <stdexcept>

namespace lrc {
namespace {

using i64 = std::int64_t;
using u128 = unsigned __int128;

i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

void require_feasible(const LrcParams& p) {
    if (!p.feasible())
        throw std::invalid_argument(
            "infeasible parameters: need w >= u and n >= r+delta-1");
}

std::string num(const char* name, std::uint64_t value) {
    return std::string(name) + "=" + std::to_string(value);
}

}  // namespace

std::uint64_t phi(std::size_t r, std::size_t delta, std::uint64_t a,
                  std::uint64_t b) {
    if (r < 1 || delta < 2)
        throw std::invalid_argument("phi needs r >= 1 and delta >= 2");
    const std::uint64_t s = r + delta - 1;
    if (a < s)
        throw std::invalid_argument("phi needs a >= r+delta-1");
    const std::uint64_t c = a % s;
    if (c == 0) return 0;
    const std::uint64_t ell = a / s;  // >= 1 because a >= s
    const std::uint64_t cap = s - c;
    const std::uint64_t half = b / 2;
    const u128 numerator = u128(b) * (b - 1) * (s - c);
    const u128 denominator = u128(ell + 1) * ell;
    const std::uint64_t avg = static_cast<std::uint64_t>(
        (numerator + denominator - 1) / denominator);
    return std::min(cap, std::max(half, avg));
}

std::int64_t eq1_bound(const LrcParams& p) {
    require_feasible(p);
    return i64(p.n) - i64(p.k) + 1;
}

std::int64_t eq2_bound(const LrcParams& p) {
    require_feasible(p);
    return i64(p.n) - i64(p.k) + 1 -
           (ceil_div(i64(p.k), i64(p.r)) - 1) * (i64(p.delta) - 1);
}

std::int64_t improved_bound(const LrcParams& p, std::size_t M) {
    require_feasible(p);
    if (p.n < M + p.s())
        throw std::invalid_argument(
            "n - M < r+delta-1: the surviving coordinate set is shorter "
            "than one block");
    const i64 base = i64(p.n) - i64(p.k) + 1;
    if (p.u <= M)
        return base - (i64(p.u) + (ceil_div(i64(p.k), i64(p.r)) - 1) *
                                      (i64(p.delta) - 1));
    const i64 half_r = ceil_div(i64(p.r), 2);
    const i64 penalty_a =
        (ceil_div(i64(p.k) + half_r, i64(p.r)) - 1) * (i64(p.delta) - 1);
    const i64 slack = i64(phi(p.r, p.delta, p.n - M, p.u - M));
    const i64 penalty_b =
        i64(M) +
        (ceil_div(i64(p.k) + slack, i64(p.r)) - 1) * (i64(p.delta) - 1);
    return base - std::min(penalty_a, penalty_b);
}

std::int64_t cor5_bound(const LrcParams& p) {
    require_feasible(p);
    const i64 slack = i64(phi(p.r, p.delta, p.n, p.u));
    return i64(p.n) - i64(p.k) + 1 -
           (ceil_div(i64(p.k) + slack, i64(p.r)) - 1) * (i64(p.delta) - 1);
}

bool cor7_applicable(const LrcParams& p) {
    if (!p.feasible()) return false;
    const i64 r = i64(p.r), v = i64(p.v), m = i64(p.m), u = i64(p.u),
              delta = i64(p.delta);
    return m >= delta && r > v && v > std::max(m - delta + 1, r / 2) &&
           u >= std::max(2 * (r + delta - 1 - m), r + delta - 1);
}

std::int64_t cor7_bound(const LrcParams& p) {
    if (!cor7_applicable(p))
        throw std::invalid_argument(
            "cor7 bound requested outside its applicability conditions");
    return i64(p.n) - i64(p.k) + 1 -
           ceil_div(i64(p.k), i64(p.r)) * (i64(p.delta) - 1);
}

bool cor8_applicable(const LrcParams& p) {
    if (!p.feasible()) return false;
    const i64 r = i64(p.r), v = i64(p.v), m = i64(p.m), u = i64(p.u),
              delta = i64(p.delta);
    return m > 0 && m <= delta - 1 && r > v && v > r / 2 &&
           u >= 2 * r + delta - 1;
}

std::int64_t cor8_bound(const LrcParams& p) {
    if (!cor8_applicable(p))
        throw std::invalid_argument(
            "cor8 bound requested outside its applicability conditions");
    return i64(p.n) - i64(p.k) + 1 -
           ceil_div(i64(p.k), i64(p.r)) * (i64(p.delta) - 1) +
           (i64(p.delta) - 1 - i64(p.m));
}

std::optional<std::int64_t> dmax_formula(const LrcParams& p) {
    if (!p.feasible()) return std::nullopt;
    const i64 penalty = ceil_div(i64(p.k), i64(p.r)) * (i64(p.delta) - 1);
    if (i64(p.k) > i64(p.n) - penalty) return std::nullopt;
    if (p.m == 0 || p.v >= p.r) return std::nullopt;
    if (i64(p.m) >= i64(p.delta)) {
        if (!cor7_applicable(p)) return std::nullopt;
        return cor7_bound(p);
    }
    if (!cor8_applicable(p)) return std::nullopt;
    return cor8_bound(p);
}

bool cor10_unachievable(const LrcParams& p) {
    if (!p.feasible()) return false;
    if (p.u <= 1) return false;
    if (p.m == 0 || i64(p.m) >= i64(p.v) + i64(p.delta) - 1) return false;
    const i64 gap = i64(p.r) - i64(p.v);
    if (ceil_div(i64(p.r), 2) <= gap) return false;
    // u(u-1)(r+delta-1-m) > (r-v)(w+1)w in exact arithmetic.
    const u128 lhs = u128(p.u) * (p.u - 1) * (p.s() - p.m);
    const u128 rhs = u128(gap) * (p.w + 1) * p.w;
    return lhs > rhs;
}

RegimeLabel classify(const LrcParams& p) {
    require_feasible(p);
    if (p.u == 0)
        throw std::invalid_argument("classification requires u >= 1");

    RegimeLabel out;
    auto cond = [&](const std::string& text) { out.conditions.push_back(text); };

    if (p.m == 0) {
        cond("(r+delta-1) | n  [" + num("m", p.m) + "]");
        out.leaf = "divisible-optimal";
        out.citations = {"Rawat-Koyluoglu-Silberstein-Vishwanath 2014",
                         "Song-Dau-Yuen-Li 2014", "Tamo-Barg 2014",
                         "Cai et al. 2020"};
        return out;
    }
    cond("(r+delta-1) does not divide n  [" + num("m", p.m) + "]");
    if (p.v == p.r) {
        cond("r | k  [" + num("v", p.v) + "]");
        out.leaf = "r-divides-k-unachievable";
        out.citations = {"Song-Dau-Yuen-Li 2014"};
        return out;
    }
    cond("r does not divide k  [" + num("v", p.v) + "]");
    if (i64(p.m) >= i64(p.v) + i64(p.delta) - 1) {
        cond("m >= v+delta-1");
        out.leaf = "m-large-optimal";
        out.citations = {"Tamo-Papailiopoulos-Dimakis 2016",
                         "Song-Dau-Yuen-Li 2014"};
        return out;
    }
    cond("m < v+delta-1");

    const i64 gap = i64(p.r) - i64(p.v);  // r-v >= 1 here
    if (i64(p.u) >= 2 * gap + 1) {
        cond("u >= 2(r-v)+1");
        if (cor7_applicable(p)) {
            cond("2v>r, m>=delta, u>=r+delta-1, u>=2(r+delta-1-m)");
            out.leaf = "corollary7-tight";
            out.citations = {"this library: bound kind cor7 + construction A"};
        } else if (cor8_applicable(p)) {
            cond("2v>r, m<=delta-1, u>=2r+delta-1");
            out.leaf = "corollary8-tight";
            out.citations = {"this library: bound kind cor8 + construction B"};
        } else {
            cond("neither cor7 nor cor8 conditions hold");
            out.leaf = "generic-unachievable";
            out.citations = {"Song-Dau-Yuen-Li 2014"};
        }
        return out;
    }
    cond("u < 2(r-v)+1");

    const i64 fill = i64(p.s()) - i64(p.m);  // r+delta-1-m >= 1
    if (gap >= i64(p.u) && i64(p.w) >= fill) {
        cond("r-v >= u and w >= r+delta-1-m");
        out.leaf = "songetal-optimal-a";
        out.citations = {"Song-Dau-Yuen-Li 2014"};
        return out;
    }
    if (i64(p.w) >= 2 * fill) {
        cond("w >= 2(r+delta-1-m)");
        out.leaf = "songetal-optimal-b";
        out.citations = {"Song-Dau-Yuen-Li 2014"};
        return out;
    }
    if (i64(p.w) >= fill) {
        // reached only when r-v < u, with w < 2(r+delta-1-m)
        cond("r+delta-1-m <= w < 2(r+delta-1-m) and r-v < u");
        out.leaf = "westerback-unachievable-a";
        out.citations = {"Westerback-Freij-Hollanti-Ernvall-Hollanti 2016"};
        return out;
    }
    cond("w < r+delta-1-m");
    if (gap < i64(p.u)) {
        cond("r-v < u");
        out.leaf = "westerback-unachievable-b";
        out.citations = {"Westerback-Freij-Hollanti-Ernvall-Hollanti 2016"};
        return out;
    }
    cond("u <= r-v");
    if (2 * i64(p.v) <= i64(p.r)) {
        cond("2v <= r");
        out.leaf = "open-RI";
        return out;
    }
    cond("2v > r");
    if (cor10_unachievable(p)) {
        cond("u >= 2 and u(u-1)(r+delta-1-m) > (r-v)(w+1)w");
        out.leaf = "corollary10-unachievable";
        out.citations = {"this library: cor10 unachievability test"};
        return out;
    }
    cond("u(u-1)(r+delta-1-m) <= (r-v)(w+1)w or u = 1");
    out.leaf = "open-RII";
    return out;
}

BoundReport bound_report(const LrcParams& p, std::optional<std::size_t> M) {
    BoundReport rep;
    rep.params = p;
    rep.eq1 = eq1_bound(p);
    rep.eq2 = eq2_bound(p);
    rep.cor5 = cor5_bound(p);
    rep.M = M;
    if (M) rep.improved = improved_bound(p, *M);
    rep.cor7_ok = cor7_applicable(p);
    rep.cor8_ok = cor8_applicable(p);
    if (rep.cor7_ok) rep.cor7 = cor7_bound(p);
    if (rep.cor8_ok) rep.cor8 = cor8_bound(p);
    rep.dmax = dmax_formula(p);
    rep.cor10 = cor10_unachievable(p);
    rep.regime = classify(p);
    return rep;
}

}  // namespace lrc
