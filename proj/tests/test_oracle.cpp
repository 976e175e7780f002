#include <doctest.h>

#include <stdexcept>

#include "lahbell/oracle.hpp"
#include "lahbell/poly.hpp"
#include "lahbell/tables.hpp"

using namespace lahbell;

TEST_CASE("enumeration matches frozen counts") {
    CHECK(count_ordered_partitions(0, 0) == 1);
    CHECK(count_ordered_partitions(1, 1) == 1);
    CHECK(count_ordered_partitions(3, 1) == 6);
    CHECK(count_ordered_partitions(3, 2) == 6);
    CHECK(count_ordered_partitions(4, 2) == 36);
    CHECK(count_ordered_partitions(2, 3) == 0);
    CHECK(count_ordered_partitions(3, 0) == 0);
    CHECK(count_all_ordered_partitions(3) == 13);
    CHECK(count_all_ordered_partitions(4) == 73);
    CHECK(count_set_partitions(4, 2) == 7);
    CHECK(count_set_partitions(5, 5) == 1);
}

TEST_CASE("enumeration agrees with the closed-form triangle everywhere below the cap") {
    for (int n = 0; n <= ordered_partition_cap(); ++n)
        for (int k = 0; k <= n; ++k) CHECK(count_ordered_partitions(n, k) == lah(n, k));
}

TEST_CASE("unweighted enumeration recovers the set-partition triangle") {
    for (int n = 0; n <= 8; ++n) {
        ExactInt total = 0;
        for (int k = 0; k <= n; ++k) {
            ExactInt c = count_set_partitions(n, k);
            CHECK(c == stirling2(n, k));
            total += c;
        }
        CHECK(total == bell(n));
    }
}

TEST_CASE("block-count distribution covers the whole row and sums to the total") {
    for (int n = 0; n <= 9; ++n) {
        auto dist = distribution_by_block_count(n);
        ExactInt total = 0;
        for (const auto& [k, c] : dist) {
            CHECK(c == lah(n, k));
            CHECK(c > 0);
            total += c;
        }
        CHECK(total == count_all_ordered_partitions(n));
        CHECK(ExactRat(total) == lah_bell_poly(n).eval(ExactRat(1)));
    }
}

TEST_CASE("the enumeration cap is enforced and adjustable") {
    REQUIRE(ordered_partition_cap() == 9);
    CHECK_THROWS_AS(count_ordered_partitions(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_all_ordered_partitions(10), std::invalid_argument);
    CHECK_THROWS_AS(count_ordered_partitions(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_set_partitions(3, -1), std::invalid_argument);
    set_ordered_partition_cap(10);
    CHECK(count_ordered_partitions(10, 1) == lah(10, 1));
    set_ordered_partition_cap(9);
    CHECK_THROWS_AS(distribution_by_block_count(10), std::invalid_argument);
}
