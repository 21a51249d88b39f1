#pragma once

// Exhaustive recovery sweep shared by the unit tests (small N) and the
// acceptance suite (full N). For every reduced m/n with n <= N, m <= 2n and
// every perturbation in {0, +-delta(1-1e-6), +-delta/2, +-delta/7}, rendered
// at plan precision, it recovers and cross-checks:
//   - the recovered value equals the target exactly
//   - the accepted quotients are the target's, or the trailing-one variant
//   - the b_i < epsilon stop and the next-quotient >= K stop agree
//   - the residual errors d_k shrink per the propagation bound
//     |d_{k+1}| < n_{k+1}(n_{k+1}-1) / (n_{k+2}(n_{k+2}-1)) * |d_k|

#include <cstdint>
#include <optional>
#include <vector>

#include <ratrec/continued_fraction.hpp>
#include <ratrec/decimal.hpp>
#include <ratrec/planner.hpp>
#include <ratrec/rational.hpp>
#include <ratrec/recovery.hpp>

namespace testsupport {

using namespace ratrec;

struct sweep_stats {
    std::uint64_t cases = 0;
    std::uint64_t value_mismatches = 0;
    std::uint64_t contract_errors = 0;
    std::uint64_t prefix_violations = 0;
    std::uint64_t stop_rule_mismatches = 0;
    std::uint64_t dk_checked = 0;
    std::uint64_t dk_violations = 0;

    bool clean() const {
        return value_mismatches == 0 && contract_errors == 0 &&
               prefix_violations == 0 && stop_rule_mismatches == 0 &&
               dk_violations == 0;
    }
};

inline void check_one_case(const rational& target,
                           const std::vector<bigint>& acf,
                           const std::vector<rational>& tails,
                           const std::vector<bigint>& chain,
                           const precision_plan& plan, const rational& pert,
                           sweep_stats& stats) {
    ++stats.cases;
    decimal_approx rendered =
        decimal_approx::from_rational(target + pert, plan.decimal_digits);
    std::vector<expansion_step> trace;
    std::optional<recovery_result> result;
    try {
        result = recover(rendered, plan, &trace);
    } catch (const contract_violation&) {
        ++stats.contract_errors;
        return;
    }
    if (result->value != target) {
        ++stats.value_mismatches;
        return;
    }

    // accepted prefix: equal, or last-decremented with a trailing 1
    const auto& quots = result->quotients_used.quotients();
    const std::size_t len = acf.size();
    bool prefix_ok = quots == acf;
    if (!prefix_ok && quots.size() == len + 1 && quots[len] == 1 &&
        quots[len - 1] == acf[len - 1] - 1) {
        prefix_ok = true;
        for (std::size_t i = 0; i + 1 < len; ++i)
            if (quots[i] != acf[i]) {
                prefix_ok = false;
                break;
            }
    }
    if (!prefix_ok) ++stats.prefix_violations;

    // both stop readings must agree at every step
    for (const expansion_step& step : trace) {
        if (step.remainder.is_zero()) continue;
        bool below_eps = step.remainder < plan.epsilon_stop;
        bool next_quotient_big =
            step.remainder.reciprocal().floor() >= plan.k_threshold;
        if (below_eps != next_quotient_big) ++stats.stop_rule_mismatches;
    }

    // residual propagation along the matched prefix
    if (!pert.is_zero() && len >= 2) {
        std::size_t matched = 0;
        while (matched < trace.size() && matched < len &&
               trace[matched].quotient == acf[matched])
            ++matched;
        const std::size_t last = len - 1;  // index L
        for (std::size_t k = 0; k + 1 < last; ++k) {
            if (k + 1 >= matched || k + 1 >= trace.size()) break;
            rational d_k = trace[k].remainder - tails[k];
            rational d_k1 = trace[k + 1].remainder - tails[k + 1];
            if (d_k.is_zero()) continue;
            const bigint& n_k1 = chain[k];
            const bigint& n_k2 = chain[k + 1];
            if (n_k1 < 2) continue;
            if (!(abs(d_k) < rational(1, n_k1 * (n_k1 - 1)))) continue;
            ++stats.dk_checked;
            rational bound = rational(n_k1 * (n_k1 - 1), n_k2 * (n_k2 - 1)) *
                             abs(d_k);
            if (!(abs(d_k1) < bound)) ++stats.dk_violations;
        }
    }
}

/// Exhaustive sweep up to max_n inclusive.
inline sweep_stats run_guarantee_sweep(int max_n) {
    sweep_stats stats;
    for (int n_bound = 2; n_bound <= max_n; ++n_bound) {
        precision_plan plan = plan_for_denominator_bound(n_bound);
        const rational perturbations[] = {
            rational(0),
            plan.delta * rational(999999, 1000000),
            -(plan.delta * rational(999999, 1000000)),
            plan.delta / rational(2),
            -(plan.delta / rational(2)),
            plan.delta / rational(7),
            -(plan.delta / rational(7)),
        };
        for (int den = 1; den <= n_bound; ++den) {
            for (int num = 0; num <= 2 * den; ++num) {
                if (gcd(bigint(num), bigint(den)) != 1) continue;
                rational target(num, den);
                const auto acf = cf_expand(target).quotients();

                // Euclidean chain n_1 = den, n_2 = num mod den, ...
                std::vector<bigint> chain{bigint(den), bigint(num % den)};
                while (chain.back() != 0)
                    chain.push_back(chain[chain.size() - 2] % chain.back());
                chain.pop_back();

                // tails[k] = [0; a_{k+1}, ..., a_L] = n_{k+2}/n_{k+1}
                std::vector<rational> tails;
                if (acf.size() > 1) {
                    tails.resize(acf.size() - 1);
                    rational v(bigint(1), acf.back());
                    tails.back() = v;
                    for (std::size_t i = acf.size() - 2; i >= 1; --i) {
                        v = rational(1) / (rational(acf[i]) + v);
                        tails[i - 1] = v;
                    }
                }

                for (const rational& pert : perturbations)
                    check_one_case(target, acf, tails, chain, plan, pert, stats);
            }
        }
    }
    return stats;
}

/// First bound N <= max_n at which a perturbation of scale*delta breaks
/// recovery for some target, or 0 if none does.
inline int first_failure_at_scale(int max_n, const rational& scale) {
    for (int n_bound = 2; n_bound <= max_n; ++n_bound) {
        precision_plan plan = plan_for_denominator_bound(n_bound);
        rational shift = scale * plan.delta;
        for (int den = 1; den <= n_bound; ++den) {
            for (int num = 0; num <= 2 * den; ++num) {
                if (gcd(bigint(num), bigint(den)) != 1) continue;
                rational target(num, den);
                for (int sign : {1, -1}) {
                    decimal_approx rendered = decimal_approx::from_rational(
                        target + shift * rational(sign), plan.decimal_digits);
                    try {
                        if (recover(rendered, plan).value != target)
                            return n_bound;
                    } catch (const contract_violation&) {
                        return n_bound;
                    }
                }
            }
        }
    }
    return 0;
}

}  // namespace testsupport
