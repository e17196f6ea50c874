#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "beckworks/beck_one.hpp"
#include "beckworks/families.hpp"
#include "beckworks/glaisher.hpp"
#include "beckworks/kadic.hpp"

using namespace beckworks;

namespace {

std::vector<std::string> partitions_of(const std::vector<beck_one::Element>& elements) {
    std::vector<std::string> out;
    for (const auto& e : elements) out.push_back(to_string(e.partition));
    return out;
}

}  // namespace

TEST_CASE("expand") {
    CHECK(partitions_of(beck_one::expand(parse_partition("(1^9)"), 3, 1)) ==
          std::vector<std::string>{"(1^6,3)", "(1^3,3^2)", "(3^3)", "(9)"});
    CHECK(partitions_of(beck_one::expand(parse_partition("(1^3,2^3)"), 3, 2)) ==
          std::vector<std::string>{"(1^3,6)"});
    CHECK(beck_one::expand(parse_partition("(1^5,2^2)"), 3, 2).empty());

    const auto e = beck_one::expand(parse_partition("(1^9)"), 3, 1);
    CHECK(e[0].witness == beck_one::Witness{parse_partition("(1^9)"), 1, 1, 1});
    CHECK(e[3].witness == beck_one::Witness{parse_partition("(1^9)"), 1, 2, 1});
}

TEST_CASE("expand preconditions") {
    CHECK_THROWS_AS(beck_one::expand(parse_partition("(1,3)"), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(beck_one::expand(parse_partition("(1^3)"), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(beck_one::expand(parse_partition("(1^3)"), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(beck_one::expand(parse_partition("(1^3)"), 1, 1), std::invalid_argument);
}

TEST_CASE("decompose") {
    const auto d = beck_one::decompose(9, 3);
    CHECK(d.nonempty_row_count() == 8);
    CHECK(d.member_count() == 13);

    CHECK(beck_one::decompose(2, 3).member_count() == 0);
    CHECK(count(2, FamilySpec::one_divisible(3)) == 0);

    const auto three = beck_one::decompose(3, 3);
    CHECK(three.member_count() == 1);
    REQUIRE(three.members().size() == 1);
    CHECK(to_string(three.members().front()) == "(3)");
    CHECK(count(3, FamilySpec::one_divisible(3)) == 1);
}

TEST_CASE("locate") {
    CHECK(beck_one::locate(parse_partition("(1^3,6)"), 3) ==
          beck_one::Witness{parse_partition("(1^3,2^3)"), 2, 1, 1});
    CHECK(beck_one::locate(parse_partition("(9)"), 3) == beck_one::Witness{parse_partition("(1^9)"), 1, 2, 1});
    CHECK(beck_one::locate(parse_partition("(1,2,3^2)"), 3) ==
          beck_one::Witness{parse_partition("(1^7,2)"), 1, 1, 2});
    CHECK_THROWS_AS(beck_one::locate(parse_partition("(1^4)"), 3), std::invalid_argument);
    CHECK_THROWS_AS(beck_one::locate(parse_partition("(3,6)"), 3), std::invalid_argument);
}

TEST_CASE("set sizes follow the digit-sum formula") {
    for (std::uint64_t k = 2; k <= 5; ++k) {
        for (std::uint64_t n = 1; n <= 35; ++n) {
            for (const auto& lambda : enumerate(n, FamilySpec::k_regular(k))) {
                for (const auto& r : lambda.runs()) {
                    const auto size = beck_one::expand(lambda, k, r.value).size();
                    const auto expected = (r.multiplicity - kadic::digit_sum(r.multiplicity, k)) / (k - 1);
                    if (size != expected) FAIL("size mismatch for " << lambda << " i=" << r.value << " k=" << k);
                }
            }
        }
    }
}

TEST_CASE("the cover is disjoint, exact, and inverted by locate") {
    for (std::uint64_t k = 2; k <= 5; ++k) {
        for (std::uint64_t n = 0; n <= 35; ++n) {
            CAPTURE(n);
            CAPTURE(k);
            const auto d = beck_one::decompose(n, k);
            std::unordered_set<Partition> seen;
            for (const auto& row : d.rows) {
                REQUIRE(row.image == glaisher::merge(row.base, k));
                for (const auto& set : row.sets) {
                    for (const auto& pi : set.members) {
                        REQUIRE(seen.insert(pi).second);
                        REQUIRE(contains(FamilySpec::one_divisible(k), pi));
                        const auto w = beck_one::locate(pi, k);
                        REQUIRE(w.base == row.base);
                        REQUIRE(w.part == set.key);
                        REQUIRE(beck_one::apply(w, k) == pi);
                    }
                }
            }
            REQUIRE(seen.size() == count_filtered(n, FamilySpec::one_divisible(k)));
        }
    }
}

TEST_CASE("every generated element regenerates from its own witness") {
    for (std::uint64_t k = 2; k <= 5; ++k) {
        for (std::uint64_t n = 1; n <= 30; ++n) {
            for (const auto& lambda : enumerate(n, FamilySpec::k_regular(k))) {
                for (const auto& r : lambda.runs()) {
                    for (const auto& e : beck_one::expand(lambda, k, r.value)) {
                        if (beck_one::locate(e.partition, k) != e.witness ||
                            beck_one::apply(e.witness, k) != e.partition) {
                            FAIL("witness mismatch for " << e.partition << " k=" << k);
                        }
                    }
                }
            }
        }
    }
}
