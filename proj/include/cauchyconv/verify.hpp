#pragma once

/**
 * @file verify.hpp
 * @brief The identity harness: per (m, mu, n), compute the higher-order
 *        convolution of Cauchy numbers along independent routes and demand
 *        exact agreement.
 *
 * The four routes share nothing but the Stirling table:
 *
 *   double_sum   - brute-force split sum over compositions of mu and n
 *                  (skipped above a term-count budget, recorded as such)
 *   single_sum   - term mu+n of the m-fold binomial convolution power
 *   integral     - exact integral of (theta)_{mu+n} against the
 *                  Irwin-Hall density rho_m
 *   stirling_sum - closed form sum_k s(mu+n,k) S(m+k,m) / C(m+k,m)
 *
 * The integral route integrates expanded polynomials piecewise and never
 * touches the Stirling closed form, and vice versa; a report is only as
 * good as the independence of its routes.
 *
 * A seeded Monte Carlo estimator of the factorial moment E (S_m)_{mu+n}
 * cross-checks the exact values stochastically.
 */

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cauchyconv/counting.hpp"
#include "cauchyconv/irwin_hall.hpp"
#include "cauchyconv/rational.hpp"
#include "cauchyconv/sequence.hpp"
#include "cauchyconv/stirling.hpp"

namespace cauchyconv {

struct IdentityReport {
    std::size_t m = 0;
    std::size_t mu = 0;
    std::size_t n = 0;
    std::optional<Rational> double_sum;  // absent when skipped by budget
    Rational single_sum;
    Rational integral;
    Rational stirling_sum;
    bool all_equal = false;

    bool double_sum_skipped() const noexcept { return !double_sum.has_value(); }
};

/// Equality of every value present in the report.
inline bool values_agree(const IdentityReport& r) {
    return r.single_sum == r.integral && r.integral == r.stirling_sum &&
           (!r.double_sum || *r.double_sum == r.single_sum);
}

/// Closed form sum_{k=0}^{p} s(p,k) S(m+k,m) / C(m+k,m).
inline Rational stirling_sum_rhs(std::size_t p, std::size_t m, const StirlingTable& table) {
    if (p > table.bound() || m + p > table.bound())
        throw std::out_of_range("stirling_sum_rhs: table bound too small");
    Rational sum;
    for (std::size_t k = 0; k <= p; ++k)
        sum += Rational(table.first_kind(p, k) * table.second_kind(m + k, m),
                        binomial(m + k, m));
    return sum;
}

inline constexpr std::uint64_t kDefaultDoubleSumBudget = 1'000'000;

/// Term count of the brute-force double sum for a cell.
inline BigInt double_sum_term_count(std::size_t m, std::size_t mu, std::size_t n) {
    return binomial(mu + m - 1, m - 1) * binomial(n + m - 1, m - 1);
}

/**
 * Evaluate all routes for one cell. The double sum is skipped (left empty)
 * when its composition count exceeds the budget.
 */
inline IdentityReport verify_identity(std::size_t m, std::size_t mu, std::size_t n,
                                      const StirlingTable& table,
                                      std::uint64_t double_sum_budget = kDefaultDoubleSumBudget) {
    if (m == 0)
        throw std::invalid_argument("verify_identity: m must be positive");
    const std::size_t p = mu + n;
    if (p > table.bound() || m + p > table.bound())
        throw std::out_of_range("verify_identity: table bound too small for cell");

    IdentityReport report;
    report.m = m;
    report.mu = mu;
    report.n = n;

    const EgfSequence cauchy = cauchy_sequence(p, table);
    if (double_sum_term_count(m, mu, n) <= BigInt(double_sum_budget))
        report.double_sum = leibniz_split(cauchy, m, mu, n);
    report.single_sum = convolve_power(cauchy, m)[p];
    report.integral = factorial_moment(m, p, table);
    report.stirling_sum = stirling_sum_rhs(p, m, table);
    report.all_equal = values_agree(report);
    return report;
}

struct SweepOptions {
    std::uint64_t double_sum_budget = kDefaultDoubleSumBudget;
    unsigned parallelism = 1;
};

/**
 * Reports for every cell 1 <= m <= m_max, 0 <= mu <= mu_max, 0 <= n <= n_max,
 * in ascending (m, mu, n) order regardless of how many workers ran them.
 * A failing cell aborts the sweep with the cell identified.
 */
inline std::vector<IdentityReport> sweep(std::size_t m_max, std::size_t mu_max,
                                         std::size_t n_max, const StirlingTable& table,
                                         SweepOptions options = {}) {
    struct Cell {
        std::size_t m, mu, n;
    };
    std::vector<Cell> cells;
    for (std::size_t m = 1; m <= m_max; ++m)
        for (std::size_t mu = 0; mu <= mu_max; ++mu)
            for (std::size_t n = 0; n <= n_max; ++n)
                cells.push_back({m, mu, n});

    std::vector<IdentityReport> reports(cells.size());
    const auto run_cell = [&](std::size_t i) {
        const Cell& c = cells[i];
        try {
            reports[i] = verify_identity(c.m, c.mu, c.n, table, options.double_sum_budget);
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep: cell (m=" + std::to_string(c.m) +
                                     ", mu=" + std::to_string(c.mu) +
                                     ", n=" + std::to_string(c.n) + ") failed: " + e.what());
        }
    };

    const unsigned workers =
        std::min<unsigned>(std::max(1u, options.parallelism),
                           static_cast<unsigned>(std::max<std::size_t>(1, cells.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            run_cell(i);
        return reports;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                try {
                    run_cell(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

struct MonteCarloReport {
    std::size_t m = 0;
    std::size_t mu = 0;
    std::size_t n = 0;
    std::uint64_t samples = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    Rational exact_value;
    double z_score = 0.0;
    std::uint64_t seed = 0;  // master seed, echoed for reproducibility
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-cell stream seed, derived deterministically from the master seed.
inline std::uint64_t cell_seed(std::uint64_t master, std::size_t m, std::size_t mu,
                               std::size_t n) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ static_cast<std::uint64_t>(m));
    h = splitmix64(h ^ static_cast<std::uint64_t>(mu));
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    return h;
}

/// xoshiro-free portable uniform: top 53 bits of a 64-bit draw.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/**
 * Estimate E (S_m)_{mu+n} by averaging the descending factorial of sampled
 * uniform sums, and score the exact value against the sample standard
 * error. Fixed (seed, m, mu, n, samples) gives a bit-identical report.
 */
inline MonteCarloReport monte_carlo_check(std::size_t m, std::size_t mu, std::size_t n,
                                          std::uint64_t samples, std::uint64_t seed,
                                          const StirlingTable& table) {
    if (m == 0)
        throw std::invalid_argument("monte_carlo_check: m must be positive");
    if (samples < 2)
        throw std::invalid_argument("monte_carlo_check: need at least 2 samples");

    const std::size_t p = mu + n;
    MonteCarloReport report;
    report.m = m;
    report.mu = mu;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.exact_value = factorial_moment(m, p, table);

    std::mt19937_64 gen(detail::cell_seed(seed, m, mu, n));
    // Welford running mean / M2.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t i = 1; i <= samples; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            sum += detail::uniform01(gen);
        double value = 1.0;
        for (std::size_t j = 0; j < p; ++j)
            value *= sum - static_cast<double>(j);
        const double delta = value - mean;
        mean += delta / static_cast<double>(i);
        m2 += delta * (value - mean);
    }
    const double sample_variance = m2 / static_cast<double>(samples - 1);
    report.estimate = mean;
    report.standard_error = std::sqrt(sample_variance / static_cast<double>(samples));

    const double exact = report.exact_value.to_double();
    if (report.standard_error > 0.0) {
        report.z_score = (report.estimate - exact) / report.standard_error;
    } else {
        // Constant statistic: agreement is z = 0, disagreement is infinite.
        report.z_score = (report.estimate == exact)
                             ? 0.0
                             : std::copysign(INFINITY, report.estimate - exact);
    }
    return report;
}

}  // namespace cauchyconv
