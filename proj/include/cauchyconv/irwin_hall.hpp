#pragma once

/**
 * @file irwin_hall.hpp
 * @brief The Irwin-Hall density (sum of m independent uniforms on [0,1])
 *        as an exact piecewise polynomial, and exact integration against it.
 *
 * The density of U_1 + ... + U_m on [0, m] is the degree-(m-1) spline
 *
 *   rho_m(theta) = 1/(m-1)! sum_{k=0}^{m-1} C(m,k) (-1)^k (theta-k)_+^{m-1}.
 *
 * The positive-part terms are handled by restriction: the term for k only
 * contributes to pieces j >= k, where it is a genuine polynomial. Every
 * piece is stored expanded in the global monomial basis, so integration,
 * knot-continuity checks and evaluation are all exact rational arithmetic.
 */

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cauchyconv/counting.hpp"
#include "cauchyconv/polynomial.hpp"
#include "cauchyconv/rational.hpp"
#include "cauchyconv/stirling.hpp"

namespace cauchyconv {

/**
 * Piecewise polynomial on integer knots: piece j is valid on [j, j+1],
 * the support is [0, piece_count()].
 */
class PiecewisePoly {
public:
    explicit PiecewisePoly(std::vector<Polynomial> pieces) : pieces_(std::move(pieces)) {
        if (pieces_.empty())
            throw std::invalid_argument("PiecewisePoly: needs at least one piece");
    }

    std::size_t piece_count() const noexcept { return pieces_.size(); }

    const Polynomial& piece(std::size_t j) const { return pieces_.at(j); }

    /**
     * Exact evaluation at a rational point of [0, piece_count()]. Interior
     * knots use the left piece by convention; points outside the support
     * are an error, not zero.
     */
    Rational evaluate(const Rational& theta) const {
        const auto m = static_cast<long long>(pieces_.size());
        if (theta < Rational(0) || theta > Rational(m))
            throw std::domain_error("PiecewisePoly: point outside support [0, " +
                                    std::to_string(m) + "]");
        // floor(theta); theta >= 0 so truncating division is floor.
        BigInt j = theta.numerator() / theta.denominator();
        if (theta.is_integer() && j > 0)
            --j;  // left piece at interior and right-end knots
        return pieces_[j.convert_to<std::size_t>()].evaluate(theta);
    }

private:
    std::vector<Polynomial> pieces_;
};

/// The density of the sum of m independent uniforms on [0,1], m >= 1.
inline PiecewisePoly irwin_hall_density(std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("irwin_hall_density: m must be positive");
    std::vector<Polynomial> pieces(m);
    const Rational scale = Rational(1) / Rational(factorial(m - 1));
    for (std::size_t k = 0; k < m; ++k) {
        // C(m,k) (-1)^k (theta - k)^{m-1}, contributing where theta >= k.
        const Rational coeff = Rational(binomial(m, k)) * (k % 2 == 0 ? scale : -scale);
        const Polynomial term =
            pow(Polynomial({Rational(-static_cast<long long>(k)), Rational(1)}), m - 1) * coeff;
        for (std::size_t j = k; j < m; ++j)
            pieces[j] = pieces[j] + term;
    }
    return PiecewisePoly(std::move(pieces));
}

inline Rational density_eval(const PiecewisePoly& density, const Rational& theta) {
    return density.evaluate(theta);
}

/// Exact integral of p(theta) * density(theta) over the full support.
inline Rational integrate_against_density(const Polynomial& p, const PiecewisePoly& density) {
    Rational total;
    for (std::size_t j = 0; j < density.piece_count(); ++j) {
        const Polynomial product = p * density.piece(j);
        total += product.integrate(Rational(static_cast<long long>(j)),
                                   Rational(static_cast<long long>(j + 1)));
    }
    return total;
}

/**
 * The p-th factorial moment of the m-fold uniform sum: the integral of
 * (theta)_p against rho_m, computed by exact piecewise integration of the
 * expanded descending-factorial polynomial.
 */
inline Rational factorial_moment(std::size_t m, std::size_t p, const StirlingTable& table) {
    return integrate_against_density(descending_factorial_poly(p, table),
                                     irwin_hall_density(m));
}

/**
 * The k-th raw moment of the m-fold uniform sum via the moment
 * representation of Stirling numbers: E S_m^k = S(m+k, m) / C(m+k, m).
 */
inline Rational raw_moment_via_stirling(std::size_t m, std::size_t k,
                                        const StirlingTable& table) {
    if (m == 0)
        throw std::invalid_argument("raw_moment_via_stirling: m must be positive");
    return Rational(table.second_kind(m + k, m), binomial(m + k, m));
}

}  // namespace cauchyconv
