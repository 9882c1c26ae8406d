#pragma once

/**
 * @file counting.hpp
 * @brief Exact factorials, binomial and multinomial coefficients.
 *
 * All results are arbitrary-precision integers; there is no machine-word
 * fast path.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cauchyconv/rational.hpp"

namespace cauchyconv {

inline BigInt factorial(std::size_t n) {
    BigInt result = 1;
    for (std::size_t i = 2; i <= n; ++i)
        result *= static_cast<unsigned long>(i);
    return result;
}

/// C(n, k); out-of-range k yields 0.
inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    // Multiplicative form; every intermediate quotient is an integer.
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        result /= static_cast<unsigned long>(i);
    }
    return result;
}

/// n! / (parts[0]! ... parts[m-1]!); the parts must sum to n.
inline BigInt multinomial(std::size_t n, const std::vector<std::size_t>& parts) {
    std::size_t sum = 0;
    for (std::size_t p : parts) sum += p;
    if (sum != n)
        throw std::invalid_argument("multinomial: parts do not sum to n");
    // Product-of-binomials form keeps all intermediates integral.
    BigInt result = 1;
    std::size_t used = 0;
    for (std::size_t p : parts) {
        used += p;
        result *= binomial(used, p);
    }
    return result;
}

}  // namespace cauchyconv
