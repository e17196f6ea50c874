#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "beckworks/verify.hpp"

using namespace beckworks::verify;

TEST_CASE("divisor_count") {
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(12) == 6);
    CHECK(divisor_count(97) == 2);
    CHECK(divisor_count(36) == 9);
}

TEST_CASE("evaluate reproduces the table totals") {
    const auto b1 = evaluate(IdentityId::beck_one(3), 9);
    CHECK(b1.lhs == 13);
    CHECK(b1.rhs == 13);
    CHECK(b1.rhs2 == 13);
    CHECK(b1.pass);

    const auto odd = evaluate(IdentityId::gap_free_odd(), 12);
    CHECK(odd.lhs == 23);
    CHECK(odd.rhs == 23);
    CHECK(odd.pass);

    const auto div = evaluate(IdentityId::divisor(), 12);
    CHECK(div.lhs == 6);
    CHECK(div.rhs == 6);
    CHECK(div.pass);

    const auto b2 = evaluate(IdentityId::beck_two(3), 12);
    CHECK(b2.lhs == 14);
    CHECK(b2.pass);
}

TEST_CASE("run_suite") {
    const IdentityId euler[] = {IdentityId::euler()};
    const auto r = run_suite(euler, 5, 2);
    REQUIRE(r.reports.size() == 5);
    CHECK(r.all_passed());
    CHECK(r.passed == 5);
    CHECK(r.reports[4].n == 5);
    CHECK(r.reports[4].lhs == 3);
    CHECK(r.reports[4].rhs == 3);

    const IdentityId b2[] = {IdentityId::beck_two(3)};
    const auto r2 = run_suite(b2, 12);
    CHECK(r2.all_passed());
    CHECK(r2.reports.back().lhs == 14);

    const IdentityId pair[] = {IdentityId::franklin(2, 0), IdentityId::glaisher(2)};
    const auto r3 = run_suite(pair, 10, 3);
    REQUIRE(r3.reports.size() == 20);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(r3.reports[i].n == r3.reports[10 + i].n);
        CHECK(r3.reports[i].lhs == r3.reports[10 + i].lhs);
        CHECK(r3.reports[i].rhs == r3.reports[10 + i].rhs);
    }

    CHECK_THROWS_AS(run_suite(euler, 0), std::invalid_argument);
}

TEST_CASE("suite output order does not depend on the thread count") {
    const auto ids = full_catalog(2, 3, 0, 1);
    const auto one = run_suite(ids, 14, 1);
    const auto many = run_suite(ids, 14, 8);
    REQUIRE(one.reports.size() == many.reports.size());
    CHECK(one.all_passed());
    for (std::size_t i = 0; i < one.reports.size(); ++i) {
        CHECK(one.reports[i].id == many.reports[i].id);
        CHECK(one.reports[i].n == many.reports[i].n);
        CHECK(one.reports[i].lhs == many.reports[i].lhs);
    }
}

TEST_CASE("identity catalog") {
    CHECK(identity_names().size() == 11);
    for (auto name : identity_names()) {
        const auto kind = identity_kind_from_name(name);
        REQUIRE(kind.has_value());
        CHECK_FALSE(expand_identity(*kind, 2, 3, 0, 1).empty());
    }
    CHECK_FALSE(identity_kind_from_name("nope").has_value());
    CHECK(expand_identity(IdentityKind::Franklin, 2, 3, 0, 3).size() == 8);
    CHECK(expand_identity(IdentityKind::BeckTwoGeneral, 1, 5, 0, 0).size() == 5);
    CHECK(expand_identity(IdentityKind::BeckOneGeneral, 1, 5, 0, 0).size() == 4);
    CHECK(IdentityId::franklin(3, 1).describe() == "franklin(k=3,m=1)");
    CHECK_THROWS_AS(IdentityId::beck_one(1).validate(), std::invalid_argument);
    CHECK_NOTHROW(IdentityId::beck_two(1).validate());
}

TEST_CASE("k = 1 two-sided identity holds as zero equals zero") {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        const auto r = evaluate(IdentityId::beck_two(1), n);
        CHECK(r.lhs == 0);
        CHECK(r.rhs == 0);
        CHECK(r.pass);
    }
}

TEST_CASE("default thread count honours the environment cap") {
    setenv("BECKWORKS_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    setenv("BECKWORKS_THREADS", "junk", 1);
    CHECK(default_thread_count() >= 1);
    unsetenv("BECKWORKS_THREADS");
    CHECK(default_thread_count() >= 1);
}
