#include <doctest.h>

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "beckworks/beck_two.hpp"
#include "beckworks/families.hpp"
#include "beckworks/glaisher.hpp"
#include "beckworks/kadic.hpp"

using namespace beckworks;

namespace {

std::vector<std::string> partitions_of(const std::vector<beck_two::Element>& elements) {
    std::vector<std::string> out;
    for (const auto& e : elements) out.push_back(to_string(e.partition));
    return out;
}

}  // namespace

TEST_CASE("factor classes") {
    const auto classes = beck_two::factor_classes(parse_partition("(1,2,3,6)"), 3);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].cofactor == 1);
    CHECK(classes[0].exponents == std::vector<unsigned>{0, 1});
    CHECK(classes[1].cofactor == 2);
    CHECK(classes[1].exponents == std::vector<unsigned>{0, 1});
}

TEST_CASE("expand_class") {
    const auto lambda = parse_partition("(1,2,3,6)");
    CHECK(partitions_of(beck_two::expand_class(lambda, 3, 1)) == std::vector<std::string>{"(1^4,2,6)"});
    CHECK(partitions_of(beck_two::expand_class(lambda, 3, 2)) == std::vector<std::string>{"(1,2^4,3)"});
    CHECK(partitions_of(beck_two::expand_class(parse_partition("(3,9)"), 3, 1)) ==
          std::vector<std::string>{"(3^4)"});
    CHECK(partitions_of(beck_two::expand_class(parse_partition("(1,2,9)"), 3, 1)) ==
          std::vector<std::string>{"(1^4,2,3^2)"});
    CHECK(beck_two::expand_class(parse_partition("(1,2,9)"), 3, 2).empty());
}

TEST_CASE("expand_class preconditions") {
    CHECK_THROWS_AS(beck_two::expand_class(parse_partition("(1^3)"), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(beck_two::expand_class(parse_partition("(1,3)"), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(beck_two::expand_class(parse_partition("(1,3)"), 3, 2), std::invalid_argument);
}

TEST_CASE("decompose") {
    const auto d = beck_two::decompose(12, 3);
    CHECK(d.nonempty_row_count() == 13);
    CHECK(d.member_count() == 14);
    CHECK(beck_two::decompose(12, 1).rows.empty());
    CHECK(beck_two::decompose(7, 2).member_count() == count_filtered(7, FamilySpec::t_family(2)));

    const auto three = beck_two::decompose(3, 2);
    CHECK(three.member_count() == 1);
    bool found = false;
    for (const auto& row : three.rows) {
        if (row.base == parse_partition("(1,2)")) {
            found = row.member_count() == 1 && row.sets.front().members.front() == parse_partition("(1^3)");
        }
    }
    CHECK(found);
}

TEST_CASE("carry_merge") {
    CHECK(beck_two::carry_merge(parse_partition("(2^4,4)"), 3) == beck_two::Witness{parse_partition("(2,4,6)"), 2, 1});
    CHECK(beck_two::carry_merge(parse_partition("(3^4)"), 3) == beck_two::Witness{parse_partition("(3,9)"), 1, 1});
    CHECK(beck_two::carry_merge(parse_partition("(1^5,2^2,3)"), 3) ==
          beck_two::Witness{parse_partition("(1^2,2^2,3^2)"), 1, 1});
    CHECK_THROWS_AS(beck_two::carry_merge(parse_partition("(1^3)"), 3), std::invalid_argument);
    CHECK_THROWS_AS(beck_two::carry_merge(parse_partition("(1^4,2^4)"), 3), std::invalid_argument);
}

TEST_CASE("set sizes and multiplicity window") {
    for (std::uint64_t k = 2; k <= 5; ++k) {
        for (std::uint64_t n = 1; n <= 35; ++n) {
            for (const auto& lambda : enumerate(n, FamilySpec::k_distinct(k))) {
                for (const auto& fc : beck_two::factor_classes(lambda, k)) {
                    std::uint64_t class_size = 0;
                    for (const auto& r : lambda.runs()) {
                        if (kadic::k_free_factor(r.value, k).cofactor == fc.cofactor) ++class_size;
                    }
                    const auto elements = beck_two::expand_class(lambda, k, fc.cofactor);
                    if (elements.size() != class_size - 1) {
                        FAIL("size mismatch for " << lambda << " d=" << fc.cofactor << " k=" << k);
                    }
                    for (const auto& e : elements) {
                        std::uint64_t over = 0;
                        bool ok = e.partition.weight() == n;
                        for (const auto& r : e.partition.runs()) {
                            if (r.multiplicity >= k + 1 && r.multiplicity <= 2 * k - 1) {
                                ++over;
                            } else if (r.multiplicity > k - 1) {
                                ok = false;
                            }
                        }
                        if (!ok || over != 1) FAIL("window violated by " << e.partition << " k=" << k);
                    }
                }
            }
        }
    }
}

TEST_CASE("the cover is disjoint, exact, and inverted by carry_merge") {
    for (std::uint64_t k = 2; k <= 5; ++k) {
        for (std::uint64_t n = 0; n <= 35; ++n) {
            CAPTURE(n);
            CAPTURE(k);
            const auto d = beck_two::decompose(n, k);
            std::unordered_set<Partition> seen;
            for (const auto& row : d.rows) {
                REQUIRE(row.image == glaisher::split(row.base, k));
                for (const auto& set : row.sets) {
                    std::uint64_t index = 0;
                    for (const auto& tau : set.members) {
                        ++index;
                        REQUIRE(seen.insert(tau).second);
                        REQUIRE(contains(FamilySpec::t_family(k), tau));
                        REQUIRE(beck_two::carry_merge(tau, k) == beck_two::Witness{row.base, set.key, index});
                    }
                }
            }
            REQUIRE(seen.size() == count_filtered(n, FamilySpec::t_family(k)));
        }
    }
}
