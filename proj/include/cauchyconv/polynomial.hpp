#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficient index equals the power of x. The trailing coefficient is
 * nonzero unless the polynomial is zero (represented by an empty
 * coefficient vector, degree -1).
 */

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cauchyconv/rational.hpp"

namespace cauchyconv {

class Polynomial {
public:
    Polynomial() = default;  // zero polynomial

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs.begin(), coeffs.end()) {
        trim();
    }

    static Polynomial monomial(std::size_t power, Rational coeff = Rational(1)) {
        std::vector<Rational> c(power + 1);
        c[power] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of x^k; 0 beyond the degree.
    const Rational& coefficient(std::size_t k) const {
        static const Rational zero;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    Rational evaluate(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = coefficient(i) + o.coefficient(i);
        return Polynomial(std::move(c));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = coefficient(i) - o.coefficient(i);
        return Polynomial(std::move(c));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(c));
    }

    Polynomial operator*(const Rational& s) const {
        std::vector<Rational> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = coeffs_[i] * s;
        return Polynomial(std::move(c));
    }

    bool operator==(const Polynomial& o) const = default;

    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const {
        if (is_zero()) return Polynomial();
        std::vector<Rational> c(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c[i + 1] = coeffs_[i] / Rational(static_cast<long long>(i + 1));
        return Polynomial(std::move(c));
    }

    /// Exact definite integral over [a, b].
    Rational integrate(const Rational& a, const Rational& b) const {
        const Polynomial f = antiderivative();
        return f.evaluate(b) - f.evaluate(a);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& base, std::size_t exponent) {
    Polynomial result({Rational(1)});
    for (std::size_t i = 0; i < exponent; ++i)
        result = result * base;
    return result;
}

}  // namespace cauchyconv
