#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "adnil/counting.hpp"
#include "adnil/dyck.hpp"

using namespace adnil;

namespace {

std::string repeated(const std::string& block, int times) {
    std::string out;
    for (int i = 0; i < times; ++i) out += block;
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("dyck");

TEST_CASE("parse accepts valid words") {
    CHECK(DyckPath::parse("ud").half_length() == 1);
    CHECK(DyckPath::parse("UDud").word() == "udud");
    // u^3 d u^3 d^2 u d^2 u d^3
    const DyckPath path = DyckPath::parse("uuuduuudduddudd" "d");
    CHECK(path.half_length() == 8);
    CHECK(path.word() == "uuuduuuddudduddd");
}

TEST_CASE("parse reports the offending position") {
    SUBCASE("negative prefix") {
        try {
            DyckPath::parse("udd");
            FAIL("expected DyckParseError");
        } catch (const DyckParseError& e) {
            CHECK(e.kind() == DyckParseError::Kind::NegativePrefix);
            CHECK(e.position() == 3);
        }
    }
    SUBCASE("illegal character") {
        try {
            DyckPath::parse("uxd");
            FAIL("expected DyckParseError");
        } catch (const DyckParseError& e) {
            CHECK(e.kind() == DyckParseError::Kind::IllegalCharacter);
            CHECK(e.position() == 2);
        }
    }
    SUBCASE("unbalanced") {
        try {
            DyckPath::parse("uud");
            FAIL("expected DyckParseError");
        } catch (const DyckParseError& e) {
            CHECK(e.kind() == DyckParseError::Kind::Unbalanced);
            CHECK(e.position() == 1);
        }
        try {
            DyckPath::parse("udu");
            FAIL("expected DyckParseError");
        } catch (const DyckParseError& e) {
            CHECK(e.kind() == DyckParseError::Kind::Unbalanced);
            CHECK(e.position() == 3);
        }
    }
    SUBCASE("empty") { CHECK_THROWS_AS(DyckPath::parse(""), DyckParseError); }
    SUBCASE("numeric step codes are not a wire format") {
        try {
            DyckPath::parse("3434");
            FAIL("expected DyckParseError");
        } catch (const DyckParseError& e) {
            CHECK(e.kind() == DyckParseError::Kind::IllegalCharacter);
            CHECK(e.position() == 1);
        }
    }
}

TEST_CASE("peak count") {
    CHECK(count_peaks(DyckPath::parse(repeated("ud", 4))) == 4);
    CHECK(count_peaks(DyckPath::parse("uuddudud")) == 3);
    CHECK(count_peaks(DyckPath::parse("uuuuuddddd")) == 1);
}

TEST_CASE("udu count") {
    // u^2 d u^2 d^3 u^2 d u d^2 u d
    CHECK(count_udu(DyckPath::parse("uuduuddduududdud")) == 2);
    CHECK(count_udu(DyckPath::parse(repeated("ud", 6))) == 5);
    CHECK(count_udu(DyckPath::parse("uudd")) == 0);
}

TEST_CASE("u-peak count") {
    CHECK(count_u_peaks(DyckPath::parse("ududud")) == 2);
    CHECK(count_u_peaks(DyckPath::parse("uuduuddduududdud")) == 2);
    CHECK(count_u_peaks(DyckPath::parse("uuuddd")) == 0);
}

TEST_CASE("udu equals u-peaks on every path") {
    for (int n = 1; n <= 8; ++n) {
        for (const DyckPath& path : enumerate_dyck_paths(n)) {
            CHECK(count_udu(path) == count_u_peaks(path));
            const int peaks = count_peaks(path);
            CHECK(peaks >= 1);
            CHECK(peaks <= n);
            CHECK(count_udu(path) <= peaks - 1);
        }
    }
}

TEST_CASE("insert_peaks") {
    CHECK(insert_peaks(DyckPath::parse("ududud"), 1, 2).word() == "uududdudud");
    CHECK(insert_peaks(DyckPath::parse("ud"), 1, 1).word() == "uudd");
    // second maximal-height peak of u(ud)^2d u(ud)^2d ud
    CHECK(insert_peaks(DyckPath::parse("uududduududdud"), 2, 1).word() == "uuduuddduududdud");
    CHECK_THROWS_AS(insert_peaks(DyckPath::parse("ud"), 2, 1), std::out_of_range);
    CHECK_THROWS_AS(insert_peaks(DyckPath::parse("ud"), 1, 0), std::invalid_argument);
}

TEST_CASE("insert_peaks raises the maximal height by one") {
    for (const DyckPath& path : enumerate_dyck_paths(5)) {
        const auto before = max_peak_offsets(path);
        const DyckPath grown = insert_peaks(path, 1, 2);
        CHECK(grown.word().size() == path.word().size() + 4);
        CHECK(DyckPath::parse(grown.word()) == grown);
        // the fresh peaks are now the only maximal ones
        CHECK(max_peak_offsets(grown).size() == 2);
        (void)before;
    }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_dyck_paths(0).size() == 1);
    const auto one = enumerate_dyck_paths(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].word() == "ud");

    const auto three = enumerate_dyck_paths(3);
    REQUIRE(three.size() == 5);
    CHECK(three[0].word() == "uuuddd");
    CHECK(three[1].word() == "uududd");
    CHECK(three[2].word() == "uuddud");
    CHECK(three[3].word() == "uduudd");
    CHECK(three[4].word() == "ududud");

    CHECK(enumerate_dyck_paths(8).size() == 1430);
    for (int n = 1; n <= 10; ++n) {
        const auto paths = enumerate_dyck_paths(n);
        CHECK(static_cast<long long>(paths.size()) == catalan(n));
        std::set<std::string> distinct;
        for (const DyckPath& path : paths) distinct.insert(path.word());
        CHECK(distinct.size() == paths.size());
        for (std::size_t i = 0; i + 1 < paths.size(); ++i) {
            CHECK(dyck_word_less(paths[i].word(), paths[i + 1].word()));
        }
    }
    CHECK_THROWS_AS(enumerate_dyck_paths(17), std::invalid_argument);
}

TEST_SUITE_END();
