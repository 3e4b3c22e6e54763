#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "lrc/bounds.hpp"

using lrc::decompose;
using lrc::LrcParams;

TEST_CASE("slack function phi: pinned values") {
    CHECK(lrc::phi(4, 2, 40, 5) == 0);  // a divisible by r+delta-1
    CHECK(lrc::phi(4, 2, 37, 6) == 3);  // min{3, max{3, ceil(90/56)}}
    CHECK(lrc::phi(4, 2, 37, 2) == 1);  // min{3, max{1, ceil(18/56)}}
    CHECK(lrc::phi(2, 2, 7, 2) == 1);
    CHECK_THROWS_AS((void)lrc::phi(4, 2, 4, 2), std::invalid_argument);
}

TEST_CASE("slack function phi: shape properties") {
    for (std::size_t r = 1; r <= 5; ++r)
        for (std::size_t delta = 2; delta <= 4; ++delta) {
            std::size_t s = r + delta - 1;
            for (std::uint64_t a = s; a <= 6 * s + 3; ++a) {
                std::uint64_t c = a % s;
                CHECK(lrc::phi(r, delta, a, 0) == 0);
                CHECK(lrc::phi(r, delta, a, 1) == 0);
                std::uint64_t prev = 0;
                for (std::uint64_t b = 0; b <= 12; ++b) {
                    std::uint64_t val = lrc::phi(r, delta, a, b);
                    CHECK(val <= (c == 0 ? 0 : s - c));
                    // Monotone in b until the cap s - c is reached.
                    if (prev != (c == 0 ? 0 : s - c)) CHECK(val >= prev);
                    prev = val;
                }
            }
        }
}

TEST_CASE("generalized Singleton bounds eq1 and eq2") {
    auto p = decompose(37, 27, 4, 2);
    CHECK(lrc::eq1_bound(p) == 11);
    CHECK(lrc::eq2_bound(p) == 5);
    CHECK(lrc::eq2_bound(decompose(45, 33, 5, 2)) == 7);
    // r = k collapses the locality penalty.
    auto q = decompose(10, 4, 4, 3);
    CHECK(lrc::eq2_bound(q) == lrc::eq1_bound(q));
    // Infeasible parameters are rejected.
    auto bad = decompose(7, 6, 1, 2);  // w = 3 < u = 5
    CHECK_FALSE(bad.feasible());
    CHECK_THROWS_AS((void)lrc::eq2_bound(bad), std::invalid_argument);
}

TEST_CASE("sharpened bound with explicit M") {
    CHECK(lrc::improved_bound(decompose(37, 27, 4, 2), 0) == 4);
    CHECK(lrc::improved_bound(decompose(25, 5, 2, 2), 1) == 19);   // u > M
    CHECK(lrc::improved_bound(decompose(24, 5, 2, 2), 3) == 16);   // u <= M
    // Large M can push the bound to zero or below: no such code exists.
    CHECK(lrc::improved_bound(decompose(37, 27, 4, 2), 6) <= 0);
    // n - M below one full repair-set width is a domain error.
    CHECK_THROWS_AS((void)lrc::improved_bound(decompose(37, 27, 4, 2), 33),
                    std::invalid_argument);
}

TEST_CASE("disjoint-family bound") {
    CHECK(lrc::cor5_bound(decompose(37, 27, 4, 2)) == 4);
    CHECK(lrc::cor5_bound(decompose(45, 33, 5, 2)) == 6);
    // m = 0 makes the slack vanish: equal to eq2.
    auto p = decompose(12, 4, 2, 2);
    CHECK(lrc::cor5_bound(p) == lrc::eq2_bound(p));
}

TEST_CASE("tight bound for m >= delta") {
    auto p = decompose(37, 27, 4, 2);
    CHECK(lrc::cor7_applicable(p));
    CHECK(lrc::cor7_bound(p) == 4);
    auto p2 = decompose(45, 33, 5, 2);
    CHECK(lrc::cor7_applicable(p2));
    CHECK(lrc::cor7_bound(p2) == 6);
    // m < delta is out of range.
    auto p3 = decompose(33, 23, 3, 2);  // m = 1, delta = 2
    CHECK_FALSE(lrc::cor7_applicable(p3));
    CHECK_THROWS_AS((void)lrc::cor7_bound(p3), std::invalid_argument);
}

TEST_CASE("tight bound for 0 < m <= delta-1") {
    auto p = decompose(33, 23, 3, 2);
    CHECK(lrc::cor8_applicable(p));
    CHECK(lrc::cor8_bound(p) == 3);
    // v = floor(r/2) fails the strict window.
    auto p2 = decompose(51, 42, 4, 2);  // u = 10, v = 2 = floor(4/2)
    CHECK(p2.v == 2);
    CHECK_FALSE(lrc::cor8_applicable(p2));
    CHECK_THROWS_AS((void)lrc::cor8_bound(p2), std::invalid_argument);
    // m = 0 is out of range.
    CHECK_FALSE(lrc::cor8_applicable(decompose(12, 4, 2, 2)));
}

TEST_CASE("largest achievable distance formula") {
    auto d1 = lrc::dmax_formula(decompose(37, 27, 4, 2));
    REQUIRE(d1.has_value());
    CHECK(*d1 == 4);
    auto d2 = lrc::dmax_formula(decompose(33, 23, 3, 2));
    REQUIRE(d2.has_value());
    CHECK(*d2 == 3);
    CHECK_FALSE(lrc::dmax_formula(decompose(12, 4, 2, 2)).has_value());  // m=0
}

TEST_CASE("the largest-distance formula matches the tight bounds") {
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t delta = 2; delta <= 4; ++delta)
            for (std::size_t k = r; k <= 40; ++k)
                for (std::size_t n = k + 1; n <= 80; ++n) {
                    auto p = decompose(n, k, r, delta);
                    if (!p.feasible()) continue;
                    auto dm = lrc::dmax_formula(p);
                    // Defined exactly when one tight-regime bound
                    // applies and the locality penalty leaves room for
                    // a nonzero code.
                    const std::int64_t penalty =
                        static_cast<std::int64_t>((k + r - 1) / r) *
                        (static_cast<std::int64_t>(delta) - 1);
                    const bool in_domain =
                        (lrc::cor7_applicable(p) || lrc::cor8_applicable(p)) &&
                        static_cast<std::int64_t>(k) + penalty <=
                            static_cast<std::int64_t>(n);
                    REQUIRE(dm.has_value() == in_domain);
                    if (dm && lrc::cor7_applicable(p))
                        CHECK(*dm == lrc::cor7_bound(p));
                    if (dm && lrc::cor8_applicable(p))
                        CHECK(*dm == lrc::cor8_bound(p));
                }
}

TEST_CASE("eq2 unachievability test") {
    CHECK(lrc::cor10_unachievable(decompose(20, 19, 5, 2)));
    // v = r with u > 1 and 0 < m < v+delta-1: always unachievable.
    auto vr = decompose(10, 6, 2, 2);
    CHECK(vr.v == vr.r);
    CHECK(lrc::cor10_unachievable(vr));
    // u = 1 never triggers it.
    CHECK_FALSE(lrc::cor10_unachievable(decompose(13, 4, 2, 2)));
    CHECK(lrc::cor10_unachievable(decompose(37, 27, 4, 2)));
}

TEST_CASE("regime classification: pinned leaves") {
    CHECK(lrc::classify(decompose(12, 4, 2, 2)).leaf == "divisible-optimal");
    CHECK(lrc::classify(decompose(13, 4, 2, 2)).leaf ==
          "r-divides-k-unachievable");
    CHECK(lrc::classify(decompose(37, 27, 4, 2)).leaf == "corollary7-tight");
    CHECK(lrc::classify(decompose(33, 23, 3, 2)).leaf == "corollary8-tight");
    CHECK(lrc::classify(decompose(14, 4, 3, 2)).leaf == "m-large-optimal");
    CHECK(lrc::classify(decompose(10, 7, 2, 2)).leaf ==
          "generic-unachievable");
    CHECK(lrc::classify(decompose(21, 9, 4, 2)).leaf == "songetal-optimal-a");
    CHECK(lrc::classify(decompose(23, 11, 4, 2)).leaf ==
          "songetal-optimal-b");
    CHECK(lrc::classify(decompose(18, 11, 4, 2)).leaf ==
          "westerback-unachievable-a");
    CHECK(lrc::classify(decompose(16, 11, 4, 2)).leaf ==
          "westerback-unachievable-b");
    CHECK(lrc::classify(decompose(11, 5, 4, 2)).leaf == "open-RI");
    CHECK(lrc::classify(decompose(29, 13, 5, 10)).leaf ==
          "corollary10-unachievable");
    CHECK(lrc::classify(decompose(15, 13, 5, 2)).leaf == "open-RII");

    // u = 0 is outside the tree.
    CHECK_THROWS_AS((void)lrc::classify(decompose(10, 4, 4, 3)),
                    std::invalid_argument);

    // Every label carries its evaluated condition chain.
    auto lab = lrc::classify(decompose(37, 27, 4, 2));
    CHECK_FALSE(lab.conditions.empty());
    CHECK_FALSE(lrc::classify(decompose(12, 4, 2, 2)).citations.empty());
}

TEST_CASE("classification is total and single-valued on a small sweep") {
    for (std::size_t r = 1; r <= 5; ++r)
        for (std::size_t delta = 2; delta <= 4; ++delta)
            for (std::size_t k = r; k <= 30; ++k)
                for (std::size_t n = k + 1; n <= 60; ++n) {
                    auto p = decompose(n, k, r, delta);
                    if (!p.feasible() || p.u < 1) continue;
                    auto lab = lrc::classify(p);
                    CHECK_FALSE(lab.leaf.empty());
                }
}

TEST_CASE("sharpened bound is strictly tighter exactly per its condition") {
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t delta = 2; delta <= 3; ++delta)
            for (std::size_t k = r; k <= 25; ++k)
                for (std::size_t n = k + 1; n <= 60; ++n) {
                    auto p = decompose(n, k, r, delta);
                    if (!p.feasible() || p.u < 1) continue;
                    bool strict =
                        lrc::improved_bound(p, 0) < lrc::eq2_bound(p);
                    std::uint64_t lhs =
                        std::min<std::uint64_t>((p.r + 1) / 2,
                                                lrc::phi(p.r, p.delta, p.n,
                                                         p.u));
                    CHECK(strict == (lhs > p.r - p.v));
                    // Never looser than eq2.
                    CHECK(lrc::improved_bound(p, 0) <= lrc::eq2_bound(p));
                }
}

TEST_CASE("bound report aggregates everything") {
    auto rep = lrc::bound_report(decompose(37, 27, 4, 2), 0);
    CHECK(rep.eq1 == 11);
    CHECK(rep.eq2 == 5);
    CHECK(rep.cor5 == 4);
    REQUIRE(rep.improved.has_value());
    CHECK(*rep.improved == 4);
    REQUIRE(rep.M.has_value());
    CHECK(*rep.M == 0);
    CHECK(rep.cor7_ok);
    CHECK_FALSE(rep.cor8_ok);
    REQUIRE(rep.cor7.has_value());
    CHECK(*rep.cor7 == 4);
    REQUIRE(rep.dmax.has_value());
    CHECK(*rep.dmax == 4);
    CHECK(rep.cor10);
    CHECK(rep.regime.leaf == "corollary7-tight");

    auto plain = lrc::bound_report(decompose(12, 4, 2, 2));
    CHECK_FALSE(plain.improved.has_value());
    CHECK_FALSE(plain.M.has_value());
    CHECK_FALSE(plain.dmax.has_value());
}
