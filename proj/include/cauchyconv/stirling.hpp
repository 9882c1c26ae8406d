#pragma once

/**
 * @file stirling.hpp
 * @brief Stirling triangles of both kinds, descending factorials, and
 *        Cauchy numbers.
 *
 * The two triangles are the change-of-basis matrices between monomials and
 * descending factorials:
 *
 *   (x)_n = sum_k s(n,k) x^k        x^n = sum_k S(n,k) (x)_k
 *
 * s(n,k) is kept signed throughout. A table is built eagerly to a fixed
 * bound and is immutable afterwards; asking beyond the bound is an error,
 * never a silent regrowth.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cauchyconv/counting.hpp"
#include "cauchyconv/polynomial.hpp"
#include "cauchyconv/rational.hpp"

namespace cauchyconv {

class StirlingTable {
public:
    explicit StirlingTable(std::size_t bound) : bound_(bound) {
        first_.resize(bound + 1);
        second_.resize(bound + 1);
        first_[0] = {BigInt(1)};
        second_[0] = {BigInt(1)};
        for (std::size_t n = 1; n <= bound; ++n) {
            first_[n].assign(n + 1, BigInt(0));
            second_[n].assign(n + 1, BigInt(0));
            for (std::size_t k = 1; k <= n; ++k) {
                // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
                first_[n][k] = first_[n - 1][k - 1];
                if (k < n)
                    first_[n][k] -= BigInt(static_cast<unsigned long>(n - 1)) * first_[n - 1][k];
                // S(n,k) = S(n-1,k-1) + k S(n-1,k)
                second_[n][k] = second_[n - 1][k - 1];
                if (k < n)
                    second_[n][k] += BigInt(static_cast<unsigned long>(k)) * second_[n - 1][k];
            }
        }
    }

    std::size_t bound() const noexcept { return bound_; }

    /// Signed Stirling number of the first kind s(n, k).
    const BigInt& first_kind(std::size_t n, std::size_t k) const { return at(first_, n, k); }

    /// Stirling number of the second kind S(n, k).
    const BigInt& second_kind(std::size_t n, std::size_t k) const { return at(second_, n, k); }

private:
    const BigInt& at(const std::vector<std::vector<BigInt>>& triangle, std::size_t n,
                     std::size_t k) const {
        static const BigInt zero(0);
        if (n > bound_)
            throw std::out_of_range("StirlingTable: n = " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(bound_));
        return k <= n ? triangle[n][k] : zero;
    }

    std::size_t bound_;
    std::vector<std::vector<BigInt>> first_;
    std::vector<std::vector<BigInt>> second_;
};

/// (x)_n expanded in the monomial basis: coefficient of x^k is s(n, k).
inline Polynomial descending_factorial_poly(std::size_t n, const StirlingTable& table) {
    if (n > table.bound())
        throw std::out_of_range("descending_factorial_poly: n exceeds table bound");
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        coeffs[k] = Rational(table.first_kind(n, k));
    return Polynomial(std::move(coeffs));
}

/// (x)_n = x (x-1) ... (x-n+1), evaluated exactly; (x)_0 = 1.
inline Rational descending_factorial_at(const Rational& x, std::size_t n) {
    Rational result(1);
    for (std::size_t i = 0; i < n; ++i)
        result *= x - Rational(static_cast<long long>(i));
    return result;
}

/**
 * The n-th Cauchy number, i.e. the integral of (theta)_n over [0,1],
 * computed as sum_k s(n,k)/(k+1). The first few values are
 * 1, 1/2, -1/6, 1/4, -19/30.
 */
inline Rational cauchy_number(std::size_t n, const StirlingTable& table) {
    if (n > table.bound())
        throw std::out_of_range("cauchy_number: n exceeds table bound");
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k)
        sum += Rational(table.first_kind(n, k), BigInt(static_cast<unsigned long>(k + 1)));
    return sum;
}

}  // namespace cauchyconv
