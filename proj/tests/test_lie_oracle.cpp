#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adnil/lie_oracle.hpp"
#include "adnil/partition.hpp"

using namespace adnil;

TEST_SUITE_BEGIN("lie_oracle");

TEST_CASE("ideal units") {
    const RootIdeal theta2 = RootIdeal::from_antichain(Antichain::parse("1-2", 2), 2);
    CHECK(ideal_units(theta2) == std::vector<MatrixUnit>{{1, 3}});

    const RootIdeal full2 = RootIdeal::from_antichain(Antichain::parse("1-1,2-2", 2), 2);
    CHECK(ideal_units(full2) == std::vector<MatrixUnit>{{1, 2}, {1, 3}, {2, 3}});

    const RootIdeal corner = RootIdeal::from_partition(LPartition(3, {1, 0, 0}));
    CHECK(ideal_units(corner) == std::vector<MatrixUnit>{{1, 4}});

    for (const LPartition& lambda : enumerate_partitions(4)) {
        for (const MatrixUnit& unit : ideal_units(RootIdeal::from_partition(lambda))) {
            CHECK(unit.row < unit.col);  // strictly upper triangular
        }
    }
}

TEST_CASE("bracket check on the highest root") {
    const RootIdeal theta2 = RootIdeal::from_antichain(Antichain::parse("1-2", 2), 2);
    CHECK(is_lie_ideal(theta2, SimpleSubset{2, {}}));
    // [E_21, E_13] = E_23 is outside the span
    CHECK_FALSE(is_lie_ideal(theta2, SimpleSubset{2, {1}}));
    CHECK_FALSE(is_lie_ideal(theta2, SimpleSubset{2, {2}}));
}

TEST_CASE("matches the combinatorial membership test") {
    for (int l = 1; l <= 4; ++l) {
        for (const LPartition& lambda : enumerate_partitions(l)) {
            const RootIdeal ideal = RootIdeal::from_partition(lambda);
            for (unsigned mask = 0; mask < (1u << l); ++mask) {
                const SimpleSubset subset = SimpleSubset::from_mask(l, mask);
                CHECK(is_lie_ideal(ideal, subset) == is_ideal_of_parabolic(ideal, subset));
            }
        }
    }
}

TEST_CASE("rank bound") {
    CHECK_THROWS_AS(is_lie_ideal(RootIdeal(7), SimpleSubset{7, {}}), std::invalid_argument);
}

TEST_SUITE_END();
