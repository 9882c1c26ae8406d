#pragma once

/**
 * @file sequence.hpp
 * @brief Truncated sequences under binomial convolution.
 *
 * An EgfSequence holds the raw terms (u_0, ..., u_N) of an exponential
 * generating function sum u_n z^n / n!, truncated at order N. Terms are
 * stored raw (u_n, not u_n/n!), so multiplying two generating functions
 * is exactly the binomial convolution
 *
 *   (u x v)_n = sum_k C(n,k) u_k v_{n-k}.
 *
 * Sequences with u_0 != 0 form an abelian group under this product; the
 * inverse is computed by the triangular recursion below. Membership is
 * checked as u_0 != 0 only: the convergence-radius requirement on infinite
 * sequences is vacuous for finite truncations.
 *
 * Truncation policy: a binary operation never extrapolates, its result
 * order is the minimum of the operand orders.
 */

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cauchyconv/counting.hpp"
#include "cauchyconv/rational.hpp"
#include "cauchyconv/stirling.hpp"

namespace cauchyconv {

class EgfSequence {
public:
    explicit EgfSequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
        if (terms_.empty())
            throw std::invalid_argument("EgfSequence: needs at least the order-0 term");
    }

    EgfSequence(std::initializer_list<Rational> terms)
        : EgfSequence(std::vector<Rational>(terms.begin(), terms.end())) {}

    /// Truncation order N; terms are indexed 0..N.
    std::size_t order() const noexcept { return terms_.size() - 1; }

    const Rational& operator[](std::size_t n) const { return terms_.at(n); }

    const std::vector<Rational>& terms() const noexcept { return terms_; }

    /// Group membership: u_0 != 0.
    bool in_group() const noexcept { return !terms_[0].is_zero(); }

    bool operator==(const EgfSequence& o) const = default;

private:
    std::vector<Rational> terms_;
};

/// All m-tuples of nonnegative integers summing to n, in lexicographic order.
struct CompositionList {
    std::size_t total;   // n
    std::size_t parts;   // m
    std::vector<std::vector<std::size_t>> items;
};

inline CompositionList compositions(std::size_t n, std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("compositions: need at least one part");
    CompositionList list{n, m, {}};
    std::vector<std::size_t> current(m, 0);
    // Fix coordinates left to right, smallest value first: lexicographic.
    auto emit = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
        if (pos + 1 == m) {
            current[pos] = remaining;
            list.items.push_back(current);
            return;
        }
        for (std::size_t v = 0; v <= remaining; ++v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    emit(emit, 0, n);
    return list;
}

inline EgfSequence binomial_convolve(const EgfSequence& u, const EgfSequence& v) {
    const std::size_t order = std::min(u.order(), v.order());
    std::vector<Rational> result(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational sum;
        BigInt coeff = 1;  // runs through C(n,0), C(n,1), ...
        for (std::size_t k = 0; k <= n; ++k) {
            sum += Rational(coeff) * u[k] * v[n - k];
            coeff = coeff * static_cast<unsigned long>(n - k) /
                    static_cast<unsigned long>(k + 1);
        }
        result[n] = sum;
    }
    return EgfSequence(std::move(result));
}

/// The group identity e = (1, 0, ..., 0) truncated at the given order.
inline EgfSequence convolve_identity(std::size_t order) {
    std::vector<Rational> terms(order + 1);
    terms[0] = Rational(1);
    return EgfSequence(std::move(terms));
}

/**
 * Convolution inverse of u, defined by u x v = e. Solved triangularly:
 *
 *   v_0 = 1/u_0,  v_n = -(1/u_0) sum_{k=1}^{n} C(n,k) u_k v_{n-k}.
 */
inline EgfSequence convolve_inverse(const EgfSequence& u) {
    if (!u.in_group())
        throw std::domain_error("convolve_inverse: u_0 = 0, sequence not in the group");
    const std::size_t order = u.order();
    std::vector<Rational> v(order + 1);
    const Rational u0_inv = u[0].reciprocal();
    v[0] = u0_inv;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational sum;
        for (std::size_t k = 1; k <= n; ++k)
            sum += Rational(binomial(n, k)) * u[k] * v[n - k];
        v[n] = -(u0_inv * sum);
    }
    return EgfSequence(std::move(v));
}

/// The tail (u_l, ..., u_N); its generating function is the l-th derivative.
inline EgfSequence shift(const EgfSequence& u, std::size_t l) {
    if (l > u.order())
        throw std::out_of_range("shift: offset exceeds sequence order");
    std::vector<Rational> terms(u.terms().begin() + static_cast<std::ptrdiff_t>(l),
                                u.terms().end());
    return EgfSequence(std::move(terms));
}

/// m-fold convolution power, by repeated pairwise convolution.
inline EgfSequence convolve_power(const EgfSequence& u, std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("convolve_power: m must be positive");
    EgfSequence result = u;
    for (std::size_t i = 1; i < m; ++i)
        result = binomial_convolve(result, u);
    return result;
}

/**
 * Term n of the m-fold power by direct multinomial expansion:
 *
 *   sum over j_1+...+j_m = n of (n; j_1,...,j_m) u_{j_1} ... u_{j_m}.
 *
 * Brute force over all compositions; kept as the independent route against
 * convolve_power.
 */
inline Rational multinomial_expand(const EgfSequence& u, std::size_t m, std::size_t n) {
    if (n > u.order())
        throw std::out_of_range("multinomial_expand: n exceeds sequence order");
    const CompositionList comps = compositions(n, m);
    Rational total;
    for (const auto& tuple : comps.items) {
        Rational term(multinomial(n, tuple));
        for (std::size_t j : tuple)
            term *= u[j];
        total += term;
    }
    return total;
}

/**
 * Term (mu + n) of the m-fold power, split Leibniz-style into an outer sum
 * over compositions of mu and an inner sum over compositions of n:
 *
 *   sum_{l_1+...+l_m=mu} (mu; l) sum_{k_1+...+k_m=n} (n; k)
 *       u_{k_1+l_1} ... u_{k_m+l_m}.
 *
 * Must agree with convolve_power(u, m)[mu + n]; imposing that equality is
 * the point of computing it this way.
 */
inline Rational leibniz_split(const EgfSequence& u, std::size_t m, std::size_t mu,
                              std::size_t n) {
    if (mu + n > u.order())
        throw std::out_of_range("leibniz_split: mu + n exceeds sequence order");
    const CompositionList outer = compositions(mu, m);
    const CompositionList inner = compositions(n, m);
    std::vector<BigInt> outer_coeff(outer.items.size());
    for (std::size_t i = 0; i < outer.items.size(); ++i)
        outer_coeff[i] = multinomial(mu, outer.items[i]);
    std::vector<BigInt> inner_coeff(inner.items.size());
    for (std::size_t i = 0; i < inner.items.size(); ++i)
        inner_coeff[i] = multinomial(n, inner.items[i]);

    Rational total;
    for (std::size_t a = 0; a < outer.items.size(); ++a) {
        const auto& l = outer.items[a];
        for (std::size_t b = 0; b < inner.items.size(); ++b) {
            const auto& k = inner.items[b];
            Rational term(outer_coeff[a] * inner_coeff[b]);
            for (std::size_t j = 0; j < m; ++j)
                term *= u[k[j] + l[j]];
            total += term;
        }
    }
    return total;
}

/// Generating-function product; coefficientwise this is binomial convolution.
inline EgfSequence series_product(const EgfSequence& u, const EgfSequence& v) {
    return binomial_convolve(u, v);
}

/// l-th derivative of the generating function; termwise this is the shift.
inline EgfSequence series_derivative(const EgfSequence& u, std::size_t l) {
    return shift(u, l);
}

/**
 * The series log(1+z)/z as an EgfSequence: term n is (-1)^n n!/(n+1).
 * Its convolution inverse is the Cauchy sequence.
 */
inline EgfSequence series_log1p_over_z(std::size_t order) {
    std::vector<Rational> terms(order + 1);
    BigInt fact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) fact *= static_cast<unsigned long>(n);
        Rational t(fact, BigInt(static_cast<unsigned long>(n + 1)));
        terms[n] = (n % 2 == 0) ? t : -t;
    }
    return EgfSequence(std::move(terms));
}

/// The Cauchy numbers (c_0, ..., c_order) as a sequence.
inline EgfSequence cauchy_sequence(std::size_t order, const StirlingTable& table) {
    std::vector<Rational> terms(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        terms[n] = cauchy_number(n, table);
    return EgfSequence(std::move(terms));
}

}  // namespace cauchyconv
