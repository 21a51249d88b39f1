#pragma once

/**
 * @file sweep.hpp
 * @brief Empirical sharpness sweeps: how far past the guaranteed accuracy
 *        radius can recovery be pushed before it starts failing?
 *
 * For each bound N and perturbation scale s, random reduced targets m/n
 * (n <= N, m <= 2n) are shifted by +-s*delta, rendered to the plan's digit
 * budget and recovered; the report tallies exact matches. Scales below 1
 * sit inside the guarantee and must never fail.
 */

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "decimal.hpp"
#include "planner.hpp"
#include "rational.hpp"
#include "recovery.hpp"
#include "version.hpp"

namespace ratrec {

struct sweep_row {
    bigint n_bound;
    rational scale;  // perturbation as a multiple of the plan's delta
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
};

struct sweep_report {
    std::vector<sweep_row> rows;  // sorted by (n_bound, scale)
    std::uint64_t seed = 0;
    std::string timestamp;  // ISO-8601 UTC; the only non-reproducible field
    std::string tool_version;
};

namespace detail {

/// Unbiased draw from [0, n), stable across standard libraries
/// (std::uniform_int_distribution is not).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Uniform reduced m/n with 1 <= n <= n_max, 0 <= m <= 2n, by rejection.
inline rational random_reduced_fraction(std::mt19937_64& rng, std::uint64_t n_max) {
    for (;;) {
        std::uint64_t n = 1 + uniform_below(rng, n_max);
        std::uint64_t m = uniform_below(rng, 2 * n + 1);
        if (gcd(bigint(m), bigint(n)) == 1) return rational(bigint(m), bigint(n));
    }
}

}  // namespace detail

inline sweep_report run_sweep(const bigint& n_bound_max,
                              std::vector<rational> scales, std::uint64_t trials,
                              std::uint64_t seed) {
    if (n_bound_max < 2)
        throw std::invalid_argument("run_sweep: n_bound_max must be >= 2");
    if (n_bound_max > 100000)
        throw std::invalid_argument("run_sweep: n_bound_max > 100000 (cost guard)");
    if (trials < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");
    if (scales.empty()) throw std::invalid_argument("run_sweep: no scales given");
    for (const rational& s : scales)
        if (!(s > rational(0)))
            throw std::invalid_argument("run_sweep: scales must be positive");
    std::sort(scales.begin(), scales.end());

    std::mt19937_64 rng(seed);
    sweep_report report;
    report.seed = seed;
    report.timestamp = detail::utc_timestamp();
    report.tool_version = version;

    const auto n_max = n_bound_max.convert_to<std::uint64_t>();
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        precision_plan plan = plan_for_denominator_bound(bigint(n));
        for (const rational& scale : scales) {
            sweep_row row{bigint(n), scale, trials, 0};
            rational shift = scale * plan.delta;
            for (std::uint64_t t = 0; t < trials; ++t) {
                rational target = detail::random_reduced_fraction(rng, n);
                rational perturbed =
                    (rng() & 1) ? target + shift : target - shift;
                decimal_approx rendered =
                    decimal_approx::from_rational(perturbed, plan.decimal_digits);
                try {
                    if (recover(rendered, plan).value == target) ++row.successes;
                } catch (const contract_violation&) {
                    // tallied as a failure
                }
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

/// CSV rendering; header row fixed, metadata in leading comment lines so two
/// reports from the same (seed, params) differ only in the timestamp line.
inline std::string to_csv(const sweep_report& report) {
    std::ostringstream os;
    os << "# tool_version = " << report.tool_version << "\n";
    os << "# seed = " << report.seed << "\n";
    os << "# timestamp = " << report.timestamp << "\n";
    os << "n_bound,scale,trials,successes\n";
    for (const sweep_row& r : report.rows)
        os << r.n_bound.str() << "," << r.scale.to_string() << "," << r.trials
           << "," << r.successes << "\n";
    return os.str();
}

}  // namespace ratrec
