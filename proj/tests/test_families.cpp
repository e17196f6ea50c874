#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "beckworks/families.hpp"

using namespace beckworks;

namespace {

std::vector<std::string> names(const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

std::vector<FamilySpec> every_spec(std::uint64_t k, std::uint64_t m) {
    return {FamilySpec::all(),
            FamilySpec::k_distinct(k),
            FamilySpec::k_regular(k),
            FamilySpec::one_divisible(k),
            FamilySpec::one_repeated(k),
            FamilySpec::t_family(k),
            FamilySpec::gap_free(),
            FamilySpec::gap_free_one_block(),
            FamilySpec::gap_free_odd_top(),
            FamilySpec::gap_free_even_top(),
            FamilySpec::distinct_odd_length(),
            FamilySpec::distinct_even_length(),
            FamilySpec::franklin_left(k, m),
            FamilySpec::franklin_right(k, m)};
}

// Euler's pentagonal recurrence.
std::vector<std::uint64_t> partition_numbers(std::size_t n_max) {
    std::vector<std::uint64_t> p(n_max + 1, 0);
    p[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::int64_t total = 0;
        for (std::int64_t j = 1;; ++j) {
            const auto g1 = static_cast<std::size_t>(j * (3 * j - 1) / 2);
            if (g1 > n) break;
            const auto sign = (j % 2 == 1) ? 1 : -1;
            total += sign * static_cast<std::int64_t>(p[n - g1]);
            const auto g2 = static_cast<std::size_t>(j * (3 * j + 1) / 2);
            if (g2 <= n) total += sign * static_cast<std::int64_t>(p[n - g2]);
        }
        p[n] = static_cast<std::uint64_t>(total);
    }
    return p;
}

}  // namespace

TEST_CASE("enumerate small families") {
    const auto o3 = enumerate(9, FamilySpec::k_regular(3));
    for (const char* row : {"(1^9)", "(1^7,2)", "(1^5,2^2)", "(1^3,2^3)", "(1,2^4)", "(1^5,4)", "(1^3,2,4)",
                            "(1^4,5)"}) {
        CAPTURE(row);
        CHECK(std::find(o3.begin(), o3.end(), parse_partition(row)) != o3.end());
    }
    CHECK(names(enumerate(5, FamilySpec::k_regular(2))) == std::vector<std::string>{"(1^5)", "(1^2,3)", "(5)"});
    CHECK(names(enumerate(5, FamilySpec::k_distinct(2))) == std::vector<std::string>{"(1,4)", "(2,3)", "(5)"});
}

TEST_CASE("enumerate is in ascending lexicographic order of the ascending sequence") {
    const auto all = enumerate(7, FamilySpec::all());
    CHECK(all.size() == 15);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(to_string(all.front()) == "(1^7)");
    CHECK(to_string(all.back()) == "(7)");
}

TEST_CASE("empty partition belongs exactly to the vacuous families") {
    CHECK(names(enumerate(0, FamilySpec::all())) == std::vector<std::string>{"()"});
    CHECK(names(enumerate(0, FamilySpec::gap_free())) == std::vector<std::string>{"()"});
    CHECK(count(0, FamilySpec::k_distinct(3)) == 1);
    CHECK(count(0, FamilySpec::k_regular(3)) == 1);
    CHECK(count(0, FamilySpec::distinct_even_length()) == 1);
    CHECK(count(0, FamilySpec::franklin_left(2, 0)) == 1);
    CHECK(count(0, FamilySpec::franklin_right(2, 0)) == 1);
    CHECK(count(0, FamilySpec::one_divisible(3)) == 0);
    CHECK(count(0, FamilySpec::one_repeated(3)) == 0);
    CHECK(count(0, FamilySpec::t_family(3)) == 0);
    CHECK(count(0, FamilySpec::gap_free_odd_top()) == 0);
    CHECK(count(0, FamilySpec::distinct_odd_length()) == 0);
    for (const auto& spec : every_spec(3, 1)) {
        CAPTURE(spec.describe());
        CHECK(count(0, spec) == count_filtered(0, spec));
    }
}

TEST_CASE("counts from the tables") {
    CHECK(count(5, FamilySpec::k_regular(2)) == 3);
    CHECK(count(5, FamilySpec::k_distinct(2)) == 3);
    CHECK(count(12, FamilySpec::gap_free()) == 23);
    CHECK(count(12, FamilySpec::gap_free_one_block()) == 6);
    CHECK(aggregate(12, FamilySpec::distinct_odd_length(), Statistic::smallest()) == 23);
    CHECK(aggregate(12, FamilySpec::distinct_even_length(), Statistic::smallest()) == 17);
    CHECK(aggregate(9, FamilySpec::k_regular(3), Statistic::length()) -
              aggregate(9, FamilySpec::k_distinct(3), Statistic::length()) ==
          26);
}

TEST_CASE("statistics") {
    const auto p = parse_partition("(1^4,2,4,7^2)");
    CHECK(evaluate(Statistic::length(), p.runs()) == 8);
    CHECK(evaluate(Statistic::distinct_count(), p.runs()) == 4);
    CHECK(evaluate(Statistic::smallest(), p.runs()) == 1);
    CHECK(evaluate(Statistic::parts_congruent_one_mod(3), p.runs()) == 7);
    CHECK(evaluate(Statistic::smallest(), Partition{}.runs()) == 0);
}

TEST_CASE("membership predicates") {
    CHECK(contains(FamilySpec::t_family(3), parse_partition("(1^5,2^2,3)")));
    CHECK_FALSE(contains(FamilySpec::t_family(3), parse_partition("(1^6,2^2,3)")));
    CHECK_FALSE(contains(FamilySpec::t_family(3), parse_partition("(1^3,2^2,3)")));
    CHECK_FALSE(contains(FamilySpec::t_family(3), parse_partition("(1^4,2^4)")));
    CHECK(contains(FamilySpec::t_family(2), parse_partition("(1^3,2)")));
    CHECK(contains(FamilySpec::one_divisible(3), parse_partition("(1^3,3^2)")));
    CHECK_FALSE(contains(FamilySpec::one_divisible(3), parse_partition("(3,6)")));
    CHECK(contains(FamilySpec::one_repeated(2), parse_partition("(1^2,3)")));
    CHECK(contains(FamilySpec::gap_free(), parse_partition("(2^3,3,4)")));
    CHECK_FALSE(contains(FamilySpec::gap_free(), parse_partition("(1,3)")));
    CHECK(contains(FamilySpec::gap_free_odd_top(), parse_partition("(1,2,3^3)")));
    CHECK_FALSE(contains(FamilySpec::gap_free_odd_top(), parse_partition("(2,3)")));
    CHECK(contains(FamilySpec::gap_free_even_top(), parse_partition("(1^2,2^5)")));
    CHECK(contains(FamilySpec::franklin_left(2, 1), parse_partition("(1^2,3)")));
    CHECK(contains(FamilySpec::franklin_right(2, 2), parse_partition("(2,4)")));
}

TEST_CASE("k = 1 families degenerate to empty") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
        CHECK(count(n, FamilySpec::k_distinct(1)) == 0);
        CHECK(count(n, FamilySpec::k_regular(1)) == 0);
        CHECK(count(n, FamilySpec::t_family(1)) == 0);
    }
}

TEST_CASE("spec validation and names") {
    CHECK_THROWS_AS(FamilySpec::k_distinct(0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(count(5, FamilySpec::k_regular(0)), std::invalid_argument);
    CHECK_NOTHROW(FamilySpec::gap_free().validate());
    CHECK(family_from_name("odd", 0, 0) == FamilySpec::k_regular(2));
    CHECK(family_from_name("distinct", 0, 0) == FamilySpec::k_distinct(2));
    CHECK(family_from_name("franklin-left", 3, 2) == FamilySpec::franklin_left(3, 2));
    CHECK_FALSE(family_from_name("nope", 2, 0).has_value());
    for (auto name : family_names()) {
        CAPTURE(name);
        CHECK(family_from_name(name, 2, 1).has_value());
    }
}

TEST_CASE("pruned generator agrees with the filter oracle") {
    for (std::uint64_t n = 0; n <= 24; ++n) {
        for (std::uint64_t k = 1; k <= 4; ++k) {
            for (std::uint64_t m = 0; m <= 2; ++m) {
                for (const auto& spec : every_spec(k, m)) {
                    CAPTURE(n);
                    CAPTURE(spec.describe());
                    const auto fast = enumerate(n, spec);
                    REQUIRE(fast == enumerate_filtered(n, spec));
                    for (const auto& p : fast) REQUIRE(contains(spec, p));
                    CHECK(aggregate(n, spec, Statistic::length()) ==
                          aggregate_filtered(n, spec, Statistic::length()));
                    CHECK(aggregate(n, spec, Statistic::smallest()) ==
                          aggregate_filtered(n, spec, Statistic::smallest()));
                }
            }
        }
    }
}

TEST_CASE("count(All) follows the partition-number recurrence") {
    const auto p = partition_numbers(60);
    for (std::uint64_t n = 0; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(count(n, FamilySpec::all()) == p[n]);
    }
    std::uint64_t oracle = 0;
    for_each_partition(40, [&](std::span<const std::uint64_t>) { ++oracle; });
    CHECK(oracle == p[40]);
}

TEST_CASE("disjoint splits are complete") {
    for (std::uint64_t n = 0; n <= 40; ++n) {
        CHECK(count(n, FamilySpec::distinct_odd_length()) + count(n, FamilySpec::distinct_even_length()) ==
              count(n, FamilySpec::k_distinct(2)));
        CHECK(count(n, FamilySpec::gap_free_odd_top()) + count(n, FamilySpec::gap_free_even_top()) <=
              count(n, FamilySpec::gap_free()));
    }
}

TEST_CASE("Euler and Glaisher counts") {
    for (std::uint64_t k = 2; k <= 6; ++k) {
        const std::uint64_t n_max = k == 2 ? 60 : 45;
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(count(n, FamilySpec::k_distinct(k)) == count(n, FamilySpec::k_regular(k)));
        }
    }
}

TEST_CASE("Franklin counts") {
    for (std::uint64_t k = 2; k <= 4; ++k) {
        for (std::uint64_t m = 0; m <= 3; ++m) {
            for (std::uint64_t n = 0; n <= 40; ++n) {
                CAPTURE(n);
                CHECK(count(n, FamilySpec::franklin_left(k, m)) == count(n, FamilySpec::franklin_right(k, m)));
            }
            if (m == 0) {
                for (std::uint64_t n = 0; n <= 30; ++n) {
                    CHECK(count(n, FamilySpec::franklin_right(k, 0)) == count(n, FamilySpec::k_regular(k)));
                }
            }
        }
    }
}
