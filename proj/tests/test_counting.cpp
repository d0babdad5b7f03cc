#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "adnil/counting.hpp"
#include "adnil/partition.hpp"
#include "adnil/root_poset.hpp"

using namespace adnil;

TEST_SUITE_BEGIN("counting");

TEST_CASE("catalan") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(9) == 4862);
    CHECK(catalan(17) == 129644790);
    CHECK(catalan(35) == 3116285494907301262LL);
    CHECK_THROWS_AS(catalan(36), std::overflow_error);
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);

    // convolution recurrence as an independent check
    std::vector<long long> c{1};
    for (int n = 0; n < 12; ++n) {
        long long next = 0;
        for (int i = 0; i <= n; ++i) next += c[i] * c[n - i];
        c.push_back(next);
        CHECK(catalan(n + 1) == next);
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(52, 26) == 495918532948104LL);
}

TEST_CASE("narayana") {
    CHECK(narayana(4, 2) == 6);
    CHECK(narayana(7, 1) == 1);
    CHECK(narayana(4, 4) == 1);
    CHECK_THROWS_AS(narayana(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(narayana(4, 5), std::invalid_argument);

    // Narayana row sums are Catalan numbers.
    for (int n = 1; n <= 10; ++n) {
        long long sum = 0;
        for (int k = 1; k <= n; ++k) sum += narayana(n, k);
        CHECK(sum == catalan(n));
    }
}

TEST_CASE("narayana counts antichains by size") {
    for (int l = 1; l <= 6; ++l) {
        std::map<std::size_t, long long> histogram;
        for (const LPartition& lambda : enumerate_partitions(l)) {
            ++histogram[RootIdeal::from_partition(lambda).minimal_roots().size()];
        }
        for (int p = 0; p <= l; ++p) {
            CHECK(histogram[static_cast<std::size_t>(p)] == narayana(l + 1, p + 1));
        }
    }
}

TEST_CASE("closed form for the udu classes") {
    CHECK(count_paths_with_udu(5, 0) == 21);
    CHECK(count_paths_with_udu(3, 1) == 6);
    CHECK(count_paths_with_udu(4, 4) == 1);
    CHECK(count_paths_with_udu(7, 7) == 1);
    CHECK_THROWS_AS(count_paths_with_udu(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(count_paths_with_udu(5, -1), std::invalid_argument);

    const std::vector<std::vector<long long>> table{
        {1, 1}, {2, 2, 1}, {4, 6, 3, 1}, {9, 16, 12, 4, 1}, {21, 45, 40, 20, 5, 1}};
    for (int l = 1; l <= 5; ++l) {
        for (int r = 0; r <= l; ++r) {
            CHECK(count_paths_with_udu(l, r) ==
                  table[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(r)]);
        }
    }

    for (int l = 1; l <= 12; ++l) {
        long long sum = 0;
        for (int r = 0; r <= l; ++r) sum += count_paths_with_udu(l, r);
        CHECK(sum == catalan(l + 1));
    }
}

TEST_CASE("census tables agree") {
    const CensusTable formula5 = census(5, CensusSource::Formula);
    CHECK(formula5.counts == std::vector<long long>{21, 45, 40, 20, 5, 1});
    CHECK(census(5, CensusSource::UduOfInsertion).counts == formula5.counts);
    CHECK(census(5, CensusSource::IdealCompatibles).counts == formula5.counts);

    CHECK(census(1, CensusSource::Formula).counts == std::vector<long long>{1, 1});

    long long sum6 = 0;
    for (const long long c : census(6, CensusSource::UduOfInsertion).counts) sum6 += c;
    CHECK(sum6 == 429);

    CHECK_THROWS_AS(census(kMaxCensusRank + 1, CensusSource::Formula), std::invalid_argument);
}

TEST_CASE("csv rendering") {
    const std::string csv = census_csv({census(1, CensusSource::Formula)});
    CHECK(csv == "l,r,count,source\n1,0,1,formula\n1,1,1,formula\n");
}

TEST_SUITE_END();
