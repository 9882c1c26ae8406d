#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cauchyconv/rational.hpp"
#include "cauchyconv/stirling.hpp"
#include "cauchyconv/verify.hpp"

using cauchyconv::BigInt;
using cauchyconv::IdentityReport;
using cauchyconv::MonteCarloReport;
using cauchyconv::Rational;
using cauchyconv::StirlingTable;

namespace {

bool reports_equal(const IdentityReport& a, const IdentityReport& b) {
    return a.m == b.m && a.mu == b.mu && a.n == b.n && a.double_sum == b.double_sum &&
           a.single_sum == b.single_sum && a.integral == b.integral &&
           a.stirling_sum == b.stirling_sum && a.all_equal == b.all_equal;
}

}  // namespace

TEST_CASE("closed form stirling sum examples") {
    const StirlingTable table(12);
    CHECK(cauchyconv::stirling_sum_rhs(0, 3, table) == Rational(1));
    CHECK(cauchyconv::stirling_sum_rhs(2, 2, table) == Rational(1, 6));
    CHECK(cauchyconv::stirling_sum_rhs(4, 1, table) == Rational(-19, 30));
    CHECK_THROWS_AS(cauchyconv::stirling_sum_rhs(11, 2, table), std::out_of_range);
}

TEST_CASE("double sum term count") {
    CHECK(cauchyconv::double_sum_term_count(1, 5, 9) == BigInt(1));
    CHECK(cauchyconv::double_sum_term_count(2, 2, 3) == BigInt(12));
    CHECK(cauchyconv::double_sum_term_count(3, 4, 4) == BigInt(225));
}

TEST_CASE("single cells agree along all four routes") {
    const StirlingTable table(12);

    const IdentityReport one = cauchyconv::verify_identity(1, 0, 4, table);
    REQUIRE(one.double_sum.has_value());
    CHECK(*one.double_sum == Rational(-19, 30));
    CHECK(one.single_sum == Rational(-19, 30));
    CHECK(one.integral == Rational(-19, 30));
    CHECK(one.stirling_sum == Rational(-19, 30));
    CHECK(one.all_equal);

    const IdentityReport two = cauchyconv::verify_identity(2, 0, 2, table);
    CHECK(two.single_sum == Rational(1, 6));
    CHECK(two.all_equal);

    const IdentityReport three = cauchyconv::verify_identity(2, 1, 0, table);
    CHECK(three.single_sum == Rational(1));
    CHECK(three.all_equal);
}

TEST_CASE("identity holds on a small grid") {
    const StirlingTable table(12);
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t mu = 0; mu <= 3; ++mu)
            for (std::size_t n = 0; n <= 3; ++n) {
                CAPTURE(m, mu, n);
                const IdentityReport r = cauchyconv::verify_identity(m, mu, n, table);
                REQUIRE(r.double_sum.has_value());
                CHECK(r.all_equal);
                CHECK(*r.double_sum == r.single_sum);
                CHECK(r.single_sum == r.integral);
                CHECK(r.integral == r.stirling_sum);
            }
}

TEST_CASE("verify_identity input validation") {
    const StirlingTable table(6);
    CHECK_THROWS_AS(cauchyconv::verify_identity(0, 1, 1, table), std::invalid_argument);
    CHECK_THROWS_AS(cauchyconv::verify_identity(3, 2, 2, table), std::out_of_range);
}

TEST_CASE("budget skips the double sum but keeps the other routes") {
    const StirlingTable table(10);
    const IdentityReport r = cauchyconv::verify_identity(2, 1, 2, table, 0);
    CHECK(r.double_sum_skipped());
    CHECK(r.all_equal);
    CHECK(r.single_sum == r.integral);

    // A budget exactly at the term count keeps the double sum.
    const IdentityReport kept = cauchyconv::verify_identity(2, 2, 3, table, 12);
    CHECK_FALSE(kept.double_sum_skipped());
    const IdentityReport dropped = cauchyconv::verify_identity(2, 2, 3, table, 11);
    CHECK(dropped.double_sum_skipped());
}

TEST_CASE("values_agree flags a mismatched route") {
    const StirlingTable table(8);
    IdentityReport r = cauchyconv::verify_identity(2, 1, 1, table);
    CHECK(cauchyconv::values_agree(r));
    r.stirling_sum += Rational(1, 7);
    CHECK_FALSE(cauchyconv::values_agree(r));
    r = cauchyconv::verify_identity(2, 1, 1, table);
    *r.double_sum += Rational(1);
    CHECK_FALSE(cauchyconv::values_agree(r));
}

TEST_CASE("sweep runs the full box in ascending order") {
    const StirlingTable table(8);
    const auto reports = cauchyconv::sweep(2, 1, 2, table);
    REQUIRE(reports.size() == 2 * 2 * 3);
    std::size_t i = 0;
    for (std::size_t m = 1; m <= 2; ++m)
        for (std::size_t mu = 0; mu <= 1; ++mu)
            for (std::size_t n = 0; n <= 2; ++n, ++i) {
                CHECK(reports[i].m == m);
                CHECK(reports[i].mu == mu);
                CHECK(reports[i].n == n);
                CHECK(reports[i].all_equal);
            }
}

TEST_CASE("sweep is deterministic and parallelism does not change it") {
    const StirlingTable table(10);
    const auto serial = cauchyconv::sweep(3, 2, 2, table);
    const auto again = cauchyconv::sweep(3, 2, 2, table);
    cauchyconv::SweepOptions opts;
    opts.parallelism = 4;
    const auto parallel = cauchyconv::sweep(3, 2, 2, table, opts);
    REQUIRE(serial.size() == again.size());
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(reports_equal(serial[i], again[i]));
        CHECK(reports_equal(serial[i], parallel[i]));
    }
}

TEST_CASE("sweep propagates the budget") {
    const StirlingTable table(8);
    cauchyconv::SweepOptions opts;
    opts.double_sum_budget = 0;
    const auto reports = cauchyconv::sweep(2, 2, 2, table, opts);
    for (const IdentityReport& r : reports) {
        CHECK(r.double_sum_skipped());
        CHECK(r.all_equal);
    }
}

TEST_CASE("sweep surfaces a failing cell") {
    const StirlingTable table(4);  // too small for cell (3, 2, 2)
    CHECK_THROWS_MATCHES(cauchyconv::sweep(3, 2, 2, table), std::runtime_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("cell (m=")));
}

TEST_CASE("monte carlo reports are reproducible") {
    const StirlingTable table(8);
    const MonteCarloReport a = cauchyconv::monte_carlo_check(2, 1, 1, 20000, 42, table);
    const MonteCarloReport b = cauchyconv::monte_carlo_check(2, 1, 1, 20000, 42, table);
    CHECK(a.estimate == b.estimate);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.z_score == b.z_score);
    CHECK(a.seed == 42);
    CHECK(a.exact_value == b.exact_value);

    const MonteCarloReport c = cauchyconv::monte_carlo_check(2, 1, 1, 20000, 43, table);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("monte carlo tracks the exact value") {
    const StirlingTable table(8);
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t p = 1; p <= 3; ++p) {
            CAPTURE(m, p);
            const MonteCarloReport r =
                cauchyconv::monte_carlo_check(m, 0, p, 100000, 20240817, table);
            CHECK(std::isfinite(r.z_score));
            CHECK(std::abs(r.z_score) <= 5.0);
            CHECK(r.standard_error > 0.0);
        }
}

TEST_CASE("monte carlo of a constant statistic") {
    const StirlingTable table(4);
    const MonteCarloReport r = cauchyconv::monte_carlo_check(2, 0, 0, 100, 7, table);
    CHECK(r.estimate == 1.0);
    CHECK(r.standard_error == 0.0);
    CHECK(r.z_score == 0.0);
    CHECK(r.exact_value == Rational(1));
}

TEST_CASE("monte carlo input validation") {
    const StirlingTable table(4);
    CHECK_THROWS_AS(cauchyconv::monte_carlo_check(0, 0, 1, 100, 1, table),
                    std::invalid_argument);
    CHECK_THROWS_AS(cauchyconv::monte_carlo_check(1, 0, 1, 1, 1, table),
                    std::invalid_argument);
}
