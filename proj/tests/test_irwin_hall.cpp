#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "cauchyconv/counting.hpp"
#include "cauchyconv/irwin_hall.hpp"
#include "cauchyconv/polynomial.hpp"
#include "cauchyconv/rational.hpp"
#include "cauchyconv/stirling.hpp"

using cauchyconv::PiecewisePoly;
using cauchyconv::Polynomial;
using cauchyconv::Rational;
using cauchyconv::StirlingTable;

namespace {

// Oracle: the positive-part definition, evaluated directly. Only valid away
// from integer points (the 0^0 corner of the m = 1 case is avoided there).
Rational density_oracle(std::size_t m, const Rational& theta) {
    Rational sum;
    for (std::size_t k = 0; k <= m; ++k) {
        const Rational base = theta - Rational(static_cast<long long>(k));
        if (base <= Rational(0)) continue;
        Rational power(1);
        for (std::size_t i = 0; i + 1 < m; ++i) power *= base;
        const Rational term = Rational(cauchyconv::binomial(m, k)) * power;
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum / Rational(cauchyconv::factorial(m - 1));
}

Rational random_interior_point(std::mt19937& gen, std::size_t m) {
    std::uniform_int_distribution<long long> den_dist(2, 17);
    for (;;) {
        const long long den = den_dist(gen);
        std::uniform_int_distribution<long long> num_dist(1, static_cast<long long>(m) * den - 1);
        const long long num = num_dist(gen);
        if (num % den != 0) return Rational(num, den);
    }
}

Polynomial derivative(const Polynomial& p) {
    std::vector<Rational> coeffs;
    for (std::size_t k = 1; k < p.coefficients().size(); ++k)
        coeffs.push_back(p.coefficient(k) * Rational(static_cast<long long>(k)));
    if (coeffs.empty()) return Polynomial();
    return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("density shape and small cases") {
    CHECK_THROWS_AS(cauchyconv::irwin_hall_density(0), std::invalid_argument);

    const PiecewisePoly rho1 = cauchyconv::irwin_hall_density(1);
    REQUIRE(rho1.piece_count() == 1);
    CHECK(rho1.evaluate(Rational(1, 3)) == Rational(1));
    CHECK(rho1.evaluate(Rational(0)) == Rational(1));

    const PiecewisePoly rho2 = cauchyconv::irwin_hall_density(2);
    REQUIRE(rho2.piece_count() == 2);
    CHECK(rho2.evaluate(Rational(1, 2)) == Rational(1, 2));
    CHECK(rho2.evaluate(Rational(3, 2)) == Rational(1, 2));
    CHECK(rho2.evaluate(Rational(1)) == Rational(1));
    CHECK(rho2.evaluate(Rational(2)) == Rational(0));

    const PiecewisePoly rho3 = cauchyconv::irwin_hall_density(3);
    CHECK(rho3.evaluate(Rational(3, 2)) == Rational(3, 4));
    CHECK(rho3.evaluate(Rational(1, 2)) == Rational(1, 8));
}

TEST_CASE("density matches the positive-part oracle at random points") {
    std::mt19937 gen(20240817u);
    for (std::size_t m = 1; m <= 8; ++m) {
        const PiecewisePoly rho = cauchyconv::irwin_hall_density(m);
        for (int probe = 0; probe < 40; ++probe) {
            const Rational theta = random_interior_point(gen, m);
            CAPTURE(m, theta.to_string());
            CHECK(rho.evaluate(theta) == density_oracle(m, theta));
        }
    }
}

TEST_CASE("density normalization symmetry and nonnegativity") {
    std::mt19937 gen(555u);
    const Polynomial one({Rational(1)});
    for (std::size_t m = 1; m <= 8; ++m) {
        const PiecewisePoly rho = cauchyconv::irwin_hall_density(m);
        CHECK(cauchyconv::integrate_against_density(one, rho) == Rational(1));
        const Rational mm(static_cast<long long>(m));
        for (int probe = 0; probe < 25; ++probe) {
            const Rational theta = random_interior_point(gen, m);
            const Rational value = rho.evaluate(theta);
            CHECK(value >= Rational(0));
            CHECK(value == rho.evaluate(mm - theta));
        }
    }
}

TEST_CASE("spline smoothness at the knots") {
    // rho_m is C^{m-2}: derivatives up to order m-2 agree across each knot.
    for (std::size_t m = 2; m <= 8; ++m) {
        const PiecewisePoly rho = cauchyconv::irwin_hall_density(m);
        for (std::size_t j = 1; j < m; ++j) {
            Polynomial left = rho.piece(j - 1);
            Polynomial right = rho.piece(j);
            const Rational knot(static_cast<long long>(j));
            for (std::size_t d = 0; d + 2 <= m; ++d) {
                CAPTURE(m, j, d);
                CHECK(left.evaluate(knot) == right.evaluate(knot));
                left = derivative(left);
                right = derivative(right);
            }
        }
    }
}

TEST_CASE("evaluation outside the support is an error") {
    const PiecewisePoly rho = cauchyconv::irwin_hall_density(3);
    CHECK_THROWS_AS(rho.evaluate(Rational(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(rho.evaluate(Rational(7, 2)), std::domain_error);
    CHECK_NOTHROW(rho.evaluate(Rational(3)));
}

TEST_CASE("interior knots take the left piece") {
    const PiecewisePoly step({Polynomial({Rational(0)}), Polynomial({Rational(1)})});
    CHECK(step.evaluate(Rational(0)) == Rational(0));
    CHECK(step.evaluate(Rational(1)) == Rational(0));
    CHECK(step.evaluate(Rational(3, 2)) == Rational(1));
    CHECK(step.evaluate(Rational(2)) == Rational(1));
}

TEST_CASE("mean and second moment of the uniform sum") {
    const Polynomial theta = Polynomial::monomial(1);
    const Polynomial theta_sq = Polynomial::monomial(2);
    for (std::size_t m = 1; m <= 8; ++m) {
        const PiecewisePoly rho = cauchyconv::irwin_hall_density(m);
        const auto ml = static_cast<long long>(m);
        CHECK(cauchyconv::integrate_against_density(theta, rho) == Rational(ml, 2));
        CHECK(cauchyconv::integrate_against_density(theta_sq, rho) ==
              Rational(ml, 12) + Rational(ml * ml, 4));
    }
}

TEST_CASE("factorial moments of a single uniform are the cauchy numbers") {
    const StirlingTable table(12);
    for (std::size_t p = 0; p <= 12; ++p)
        CHECK(cauchyconv::factorial_moment(1, p, table) ==
              cauchyconv::cauchy_number(p, table));
}

TEST_CASE("raw moments match the stirling quotient") {
    const StirlingTable table(14);
    CHECK(cauchyconv::raw_moment_via_stirling(1, 2, table) == Rational(1, 3));
    CHECK(cauchyconv::raw_moment_via_stirling(2, 2, table) == Rational(7, 6));
    CHECK_THROWS_AS(cauchyconv::raw_moment_via_stirling(0, 2, table), std::invalid_argument);

    for (std::size_t m = 1; m <= 6; ++m) {
        const PiecewisePoly rho = cauchyconv::irwin_hall_density(m);
        for (std::size_t k = 0; k <= 8; ++k) {
            CAPTURE(m, k);
            CHECK(cauchyconv::integrate_against_density(Polynomial::monomial(k), rho) ==
                  cauchyconv::raw_moment_via_stirling(m, k, table));
        }
    }
}

TEST_CASE("integration against the density is linear") {
    std::mt19937 gen(99u);
    std::uniform_int_distribution<long long> coeff(-6, 6);
    const PiecewisePoly rho = cauchyconv::irwin_hall_density(4);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Rational> a, b;
        for (int k = 0; k < 5; ++k) {
            a.emplace_back(coeff(gen));
            b.emplace_back(coeff(gen));
        }
        const Polynomial p(a), q(b);
        CHECK(cauchyconv::integrate_against_density(p + q, rho) ==
              cauchyconv::integrate_against_density(p, rho) +
                  cauchyconv::integrate_against_density(q, rho));
    }
}
