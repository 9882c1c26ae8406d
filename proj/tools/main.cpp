/**
 * @file main.cpp
 * @brief Command line front end: Cauchy number tables, Stirling triangles,
 *        Irwin-Hall density evaluation, identity verification sweeps and
 *        seeded Monte Carlo cross-checks.
 *
 * Exit codes: 0 success (and, for verify, all cells equal), 1 identity
 * violation, 2 usage error.
 */

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cauchyconv/cauchyconv.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "markdown";
    std::string path;  // empty: standard output
};

void add_output_options(CLI::App* cmd, OutputOptions& output) {
    cmd->add_option("--format", output.format, "Output format: json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    cmd->add_option("--out", output.path, "Write the report to this file instead of stdout");
}

int emit(const cauchyconv::ReportTable& table, const OutputOptions& output) {
    const std::string text =
        cauchyconv::render(table, cauchyconv::parse_output_format(output.format));
    if (output.path.empty()) {
        std::cout << text;
        return kExitSuccess;
    }
    std::ofstream file(output.path);
    if (!file) {
        std::cerr << "error: cannot open output file \"" << output.path << "\"\n";
        return kExitUsage;
    }
    file << text;
    return kExitSuccess;
}

std::uint64_t parse_seed_text(const std::string& text, const std::string& origin) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(origin + " must be an unsigned 64-bit integer, got \"" +
                                    text + "\"");
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (errno == ERANGE || end != text.c_str() + text.size())
        throw std::invalid_argument(origin + " out of range: \"" + text + "\"");
    return value;
}

/// Seed priority: --seed flag, then CAUCHY_CONV_SEED, then entropy.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("CAUCHY_CONV_SEED"))
        return parse_seed_text(env, "CAUCHY_CONV_SEED");
    std::random_device entropy;
    return (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
}

int run_cauchy(std::size_t n_max, const OutputOptions& output) {
    const cauchyconv::StirlingTable table(n_max);
    cauchyconv::ReportTable report;
    report.command = "cauchy";
    report.columns = {"n", "cauchy"};
    for (std::size_t n = 0; n <= n_max; ++n)
        report.rows.push_back(
            {{"n", n}, {"cauchy", cauchyconv::cauchy_number(n, table).to_string()}});
    return emit(report, output);
}

int run_stirling(const std::string& kind, std::size_t n_max, const OutputOptions& output) {
    const cauchyconv::StirlingTable table(n_max);
    const bool first = kind == "first";
    cauchyconv::ReportTable report;
    report.command = "stirling";
    report.columns = {"n", "k", "value"};
    for (std::size_t n = 0; n <= n_max; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const cauchyconv::BigInt& value =
                first ? table.first_kind(n, k) : table.second_kind(n, k);
            report.rows.push_back({{"n", n}, {"k", k}, {"value", value.str()}});
        }
    report.extra["kind"] = kind;
    return emit(report, output);
}

int run_density(std::size_t m, const std::string& at, const OutputOptions& output) {
    const cauchyconv::Rational theta = cauchyconv::Rational::parse(at);
    const cauchyconv::PiecewisePoly density = cauchyconv::irwin_hall_density(m);
    const cauchyconv::Rational value = density.evaluate(theta);
    cauchyconv::ReportTable report;
    report.command = "density";
    report.columns = {"m", "theta", "value"};
    report.rows.push_back(
        {{"m", m}, {"theta", theta.to_string()}, {"value", value.to_string()}});
    return emit(report, output);
}

struct CorruptCell {
    std::size_t m = 0, mu = 0, n = 0;
};

int run_verify(std::size_t m_max, std::size_t mu_max, std::size_t n_max,
               unsigned parallelism, const std::optional<CorruptCell>& corrupt,
               const OutputOptions& output) {
    const cauchyconv::StirlingTable table(m_max + mu_max + n_max);
    cauchyconv::SweepOptions options;
    options.parallelism = parallelism;

    const auto start = std::chrono::steady_clock::now();
    std::vector<cauchyconv::IdentityReport> cells =
        cauchyconv::sweep(m_max, mu_max, n_max, table, options);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (corrupt) {
        bool found = false;
        for (cauchyconv::IdentityReport& cell : cells)
            if (cell.m == corrupt->m && cell.mu == corrupt->mu && cell.n == corrupt->n) {
                cell.stirling_sum += cauchyconv::Rational(1);
                cell.all_equal = cauchyconv::values_agree(cell);
                found = true;
            }
        if (!found) {
            std::cerr << "error: --corrupt-cell outside the sweep box\n";
            return kExitUsage;
        }
    }

    std::size_t unequal = 0;
    std::size_t skipped = 0;
    cauchyconv::ReportTable report;
    report.command = "verify";
    report.columns = {"m",        "mu",           "n",
                      "double_sum", "single_sum", "integral",
                      "stirling_sum", "double_sum_skipped", "all_equal"};
    for (const cauchyconv::IdentityReport& cell : cells) {
        if (!cell.all_equal) ++unequal;
        if (cell.double_sum_skipped()) ++skipped;
        nlohmann::ordered_json row = {{"m", cell.m},
                                      {"mu", cell.mu},
                                      {"n", cell.n},
                                      {"double_sum", nullptr},
                                      {"single_sum", cell.single_sum.to_string()},
                                      {"integral", cell.integral.to_string()},
                                      {"stirling_sum", cell.stirling_sum.to_string()},
                                      {"double_sum_skipped", cell.double_sum_skipped()},
                                      {"all_equal", cell.all_equal}};
        if (cell.double_sum) row["double_sum"] = cell.double_sum->to_string();
        report.rows.push_back(std::move(row));
    }
    report.extra["summary"] = {{"cells", cells.size()},
                               {"unequal_cells", unequal},
                               {"double_sum_skipped_cells", skipped},
                               {"elapsed_seconds", elapsed},
                               {"all_equal", unequal == 0}};

    const int emit_status = emit(report, output);

    char line[160];
    std::snprintf(line, sizeof(line), "verify: %zu cells, %zu unequal, %zu skipped, %.2f s\n",
                  cells.size(), unequal, skipped, elapsed);
    std::cerr << line;

    if (emit_status != kExitSuccess) return emit_status;
    return unequal == 0 ? kExitSuccess : kExitViolation;
}

int run_montecarlo(std::size_t m, std::size_t mu, std::size_t n, std::uint64_t samples,
                   const std::optional<std::uint64_t>& flag_seed,
                   const OutputOptions& output) {
    const std::uint64_t seed = resolve_seed(flag_seed);
    const cauchyconv::StirlingTable table(m + mu + n);
    const cauchyconv::MonteCarloReport mc =
        cauchyconv::monte_carlo_check(m, mu, n, samples, seed, table);
    cauchyconv::ReportTable report;
    report.command = "montecarlo";
    report.columns = {"m",       "mu",    "n",        "samples",        "seed",
                      "estimate", "standard_error", "exact_value", "z_score"};
    report.rows.push_back({{"m", mc.m},
                           {"mu", mc.mu},
                           {"n", mc.n},
                           {"samples", mc.samples},
                           {"seed", mc.seed},
                           {"estimate", mc.estimate},
                           {"standard_error", mc.standard_error},
                           {"exact_value", mc.exact_value.to_string()},
                           {"z_score", mc.z_score}});
    return emit(report, output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Cauchy numbers, Stirling triangles, Irwin-Hall splines and "
                 "convolution identity verification"};
    app.require_subcommand(1);

    // cauchy
    std::size_t cauchy_n_max = 0;
    OutputOptions cauchy_output;
    CLI::App* cauchy = app.add_subcommand("cauchy", "Table of Cauchy numbers c_0..c_n");
    cauchy->add_option("--n-max", cauchy_n_max, "Largest index n")->required();
    add_output_options(cauchy, cauchy_output);

    // stirling
    std::string stirling_kind;
    std::size_t stirling_n_max = 0;
    OutputOptions stirling_output;
    CLI::App* stirling = app.add_subcommand("stirling", "Stirling number triangle");
    stirling->add_option("--kind", stirling_kind, "Triangle kind: first or second")
        ->required()
        ->check(CLI::IsMember({"first", "second"}));
    stirling->add_option("--n-max", stirling_n_max, "Largest row n")->required();
    add_output_options(stirling, stirling_output);

    // density
    std::size_t density_m = 0;
    std::string density_at;
    OutputOptions density_output;
    CLI::App* density =
        app.add_subcommand("density", "Evaluate the Irwin-Hall density exactly");
    density->add_option("--m", density_m, "Number of uniform summands (m >= 1)")->required();
    density->add_option("--at", density_at, "Evaluation point, an integer or \"p/q\"")
        ->required();
    add_output_options(density, density_output);

    // verify
    std::size_t verify_m_max = 0, verify_mu_max = 0, verify_n_max = 0;
    unsigned verify_parallelism = 1;
    std::string verify_corrupt;
    OutputOptions verify_output;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check the convolution identity on a box of (m, mu, n) cells");
    verify->add_option("--m-max", verify_m_max, "Largest convolution order m")->required();
    verify->add_option("--mu-max", verify_mu_max, "Largest split index mu")->required();
    verify->add_option("--n-max", verify_n_max, "Largest index n")->required();
    verify->add_option("--parallelism", verify_parallelism, "Worker thread count")
        ->check(CLI::Range(1u, 1024u));
    verify->add_option("--corrupt-cell", verify_corrupt, "m,mu,n")->group("");
    add_output_options(verify, verify_output);

    // montecarlo
    std::size_t mc_m = 0, mc_mu = 0, mc_n = 0;
    std::uint64_t mc_samples = 0;
    std::uint64_t mc_seed_value = 0;
    OutputOptions mc_output;
    CLI::App* montecarlo = app.add_subcommand(
        "montecarlo", "Sampled factorial moment against the exact value");
    montecarlo->add_option("--m", mc_m, "Number of uniform summands (m >= 1)")->required();
    montecarlo->add_option("--mu", mc_mu, "Split index mu")->required();
    montecarlo->add_option("--n", mc_n, "Index n")->required();
    montecarlo->add_option("--samples", mc_samples, "Sample count (>= 2)")->required();
    CLI::Option* mc_seed_option =
        montecarlo->add_option("--seed", mc_seed_value, "Master seed (64-bit unsigned)");
    add_output_options(montecarlo, mc_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (cauchy->parsed()) return run_cauchy(cauchy_n_max, cauchy_output);
        if (stirling->parsed())
            return run_stirling(stirling_kind, stirling_n_max, stirling_output);
        if (density->parsed()) return run_density(density_m, density_at, density_output);
        if (verify->parsed()) {
            std::optional<CorruptCell> corrupt;
            if (!verify_corrupt.empty()) {
                CorruptCell cell;
                if (std::sscanf(verify_corrupt.c_str(), "%zu,%zu,%zu", &cell.m, &cell.mu,
                                &cell.n) != 3)
                    throw std::invalid_argument("--corrupt-cell expects \"m,mu,n\"");
                corrupt = cell;
            }
            return run_verify(verify_m_max, verify_mu_max, verify_n_max, verify_parallelism,
                              corrupt, verify_output);
        }
        if (montecarlo->parsed()) {
            std::optional<std::uint64_t> seed;
            if (mc_seed_option->count() > 0) seed = mc_seed_value;
            return run_montecarlo(mc_m, mc_mu, mc_n, mc_samples, seed, mc_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
