#include <doctest.h>

#include <stdexcept>

#include "lahbell/poly.hpp"
#include "lahbell/tables.hpp"

using namespace lahbell;

TEST_CASE("lah triangle matches frozen rows") {
    CHECK(lah(0, 0) == 1);
    CHECK(lah(1, 0) == 0);
    CHECK(lah(1, 1) == 1);
    CHECK(lah(3, 1) == 6);
    CHECK(lah(3, 2) == 6);
    CHECK(lah(3, 3) == 1);
    CHECK(lah(4, 1) == 24);
    CHECK(lah(4, 2) == 36);
    CHECK(lah(4, 3) == 12);
    CHECK(lah(5, 2) == 240);
    CHECK(lah(6, 3) == 1200);
    CHECK(lah(2, 5) == 0);
    CHECK(lah(12, 1) == factorial(12));
    CHECK_THROWS_AS(lah(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(lah(2, -1), std::invalid_argument);
}

TEST_CASE("r-shifted triangle reduces to the plain one at r = 0") {
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) CHECK(r_lah(n, k, 0) == lah(n, k));
}

TEST_CASE("r-shifted triangle matches frozen rows") {
    CHECK(r_lah(0, 0, 1) == 1);
    CHECK(r_lah(1, 0, 1) == 1);
    CHECK(r_lah(1, 1, 1) == 1);
    CHECK(r_lah(2, 0, 1) == 2);
    CHECK(r_lah(2, 1, 1) == 4);
    CHECK(r_lah(2, 2, 1) == 1);
    CHECK(r_lah(3, 0, 2) == 24);
    CHECK(r_lah(3, 1, 2) == 36);
    CHECK(r_lah(3, 2, 2) == 12);
    CHECK(r_lah(3, 3, 2) == 1);
    CHECK(r_lah(4, 7, 3) == 0);
    CHECK_THROWS_AS(r_lah(1, 0, -1), std::invalid_argument);
}

TEST_CASE("k = 0 column of the r-shifted triangle is n! C(n+r-1, r-1)") {
    for (int n = 0; n <= 12; ++n)
        for (int r = 1; r <= 5; ++r) {
            ExactInt expect = factorial(n) * binomial_int(n + r - 1, r - 1);
            CHECK(r_lah(n, 0, r) == expect);
        }
    // at r = 0 the column collapses to the plain triangle: 1, then zeros
    CHECK(r_lah(0, 0, 0) == 1);
    for (int n = 1; n <= 12; ++n) CHECK(r_lah(n, 0, 0) == 0);
}

TEST_CASE("triangle containers expose the same entries as the closed forms") {
    Triangle t = make_triangle(TriangleKind::RLah, 8, 2);
    CHECK(t.kind == TriangleKind::RLah);
    CHECK(t.r == 2);
    REQUIRE(t.rows.size() == 9);
    for (int n = 0; n <= 8; ++n) {
        REQUIRE(t.rows[static_cast<std::size_t>(n)].size() ==
                static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) CHECK(t.entry(n, k) == r_lah(n, k, 2));
    }
    CHECK(t.entry(3, 7) == 0);
    CHECK_THROWS_AS(t.entry(9, 0), std::out_of_range);
    CHECK_THROWS_AS(t.entry(-1, 0), std::out_of_range);

    Triangle s = make_triangle(TriangleKind::Stirling2, 6);
    CHECK(s.entry(6, 3) == stirling2(6, 3));
    Triangle l = make_triangle(TriangleKind::Lah, 5);
    CHECK(l.entry(5, 2) == lah(5, 2));
}

TEST_CASE("additive recurrence cross-validates the closed form") {
    for (int r = 0; r <= 5; ++r) {
        CheckReport rep = r_lah_recurrence_check(20, r);
        CHECK(rep.ok);
    }
    CHECK_THROWS_AS(r_lah_recurrence_check(0, 1), std::invalid_argument);
}

TEST_CASE("recurrence holds entrywise in its raw form") {
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 15; ++n)
            for (int k = 0; k <= n + 1; ++k) {
                ExactInt prev = k >= 1 ? r_lah(n, k - 1, r) : ExactInt(0);
                CHECK(r_lah(n + 1, k, r) == prev + (n + k + r) * r_lah(n, k, r));
            }
}

TEST_CASE("stirling and bell numbers match frozen values") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(6, 3) == 90);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(3, 5) == 0);
    const long expect_bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 0; n <= 10; ++n) CHECK(bell(n) == expect_bell[n]);
}

TEST_CASE("set-partition form of the spivey recurrence holds") {
    for (int n = 0; n + 0 <= 14; ++n)
        for (int m = 0; n + m <= 14; ++m) CHECK(spivey_bell_check(n, m).ok);
}

TEST_CASE("triangle row sums agree with polynomial evaluation at one") {
    for (int n = 0; n <= 15; ++n) {
        ExactInt lsum = 0;
        for (int k = 0; k <= n; ++k) lsum += lah(n, k);
        CHECK(ExactRat(lsum) == lah_bell_poly(n).eval(ExactRat(1)));
        for (int r = 0; r <= 3; ++r) {
            ExactInt rsum = 0;
            for (int k = 0; k <= n; ++k) rsum += r_lah(n, k, r);
            CHECK(ExactRat(rsum) == r_lah_bell_poly(n, r).eval(ExactRat(1)));
        }
    }
}

TEST_CASE("fault injection perturbs exactly one entry and is reversible") {
    ExactInt before = lah(3, 2);
    corrupt_lah_entry_for_testing(3, 2, 5);
    CHECK(lah(3, 2) == before + 5);
    CHECK(lah(3, 1) == 6);
    CHECK(lah(4, 2) == 36);
    CheckReport broken = defining_relation_check(3, 0, DefiningVariant::Classic);
    CHECK_FALSE(broken.ok);
    CHECK(!broken.detail.empty());
    corrupt_lah_entry_for_testing(3, 2, 0);
    CHECK(lah(3, 2) == before);
    CHECK(defining_relation_check(3, 0, DefiningVariant::Classic).ok);
}
