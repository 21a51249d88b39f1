#pragma once

/**
 * @file recovery.hpp
 * @brief Exact rational recovery from a decimal approximation.
 *
 * The approximation is expanded as a continued fraction in exact arithmetic:
 *   a_i = floor(x_i), b_i = x_i - a_i, x_{i+1} = 1/b_i,
 * stopping as soon as b_i < epsilon (equivalently, as soon as the next
 * partial quotient would reach K = 1/epsilon). Provided the input lies
 * within the plan's delta of some rational with denominator <= N, the
 * accepted quotients are the target's own quotients -- possibly with the
 * last one decremented and a 1 appended, which canonicalization folds back.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "continued_fraction.hpp"
#include "decimal.hpp"
#include "planner.hpp"
#include "rational.hpp"

namespace ratrec {

/// Recovered value whose denominator exceeds the stated bound: the input was
/// not within delta of any admissible rational, or the bound was wrong.
class contract_violation : public std::runtime_error {
    rational recovered_;
    bigint n_bound_;

public:
    contract_violation(rational recovered, bigint n_bound, const std::string& what)
        : std::runtime_error(what),
          recovered_(std::move(recovered)),
          n_bound_(std::move(n_bound)) {}

    const rational& recovered() const { return recovered_; }
    const bigint& n_bound() const { return n_bound_; }
};

struct recovery_result {
    rational value;                      // denominator <= plan.n_bound
    continued_fraction quotients_used;   // accepted prefix (possibly trailing-1)
    std::optional<bigint> terminating_quotient;  // >= K when present
    bool collapsed_trailing_one = false;
};

/// One expansion step, exposed for instrumented runs: the partial quotient
/// a_i and the exact remainder b_i = x_i - a_i.
struct expansion_step {
    bigint quotient;
    rational remainder;
};

/// Recovers the unique rational with denominator <= plan.n_bound lying
/// within plan.delta of `approx`. The caller is responsible for that
/// precondition; when it fails, either the result would have a denominator
/// beyond the bound (-> contract_violation) or a wrong rational inside the
/// bound is returned -- no algorithm can tell those inputs apart.
///
/// Negative inputs are recovered via their absolute value, with the sign
/// reattached; `trace`, when given, records every (a_i, b_i) pair of the
/// magnitude run, including the terminating step.
inline recovery_result recover(const decimal_approx& approx,
                               const precision_plan& plan,
                               std::vector<expansion_step>* trace = nullptr) {
    const rational input = approx.to_rational();
    rational x = ratrec::abs(input);

    std::vector<bigint> accepted;
    std::optional<bigint> terminating;
    for (;;) {
        bigint a = x.floor();
        rational b = x - rational(a);
        accepted.push_back(a);
        if (trace) trace->push_back({a, b});
        if (b.is_zero()) break;  // input exhausted: exactly rational already
        if (b < plan.epsilon_stop) {
            terminating = b.reciprocal().floor();  // first quotient >= K
            break;
        }
        x = b.reciprocal();
    }

    continued_fraction raw{accepted};
    continued_fraction canonical = cf_canonicalize(raw);
    bool collapsed = canonical.size() != raw.size();
    rational magnitude = cf_eval(canonical);
    rational value = input.is_negative() ? -magnitude : magnitude;

    if (value.denominator() > plan.n_bound)
        throw contract_violation(
            value, plan.n_bound,
            "recover: result " + value.to_string() + " has denominator > " +
                plan.n_bound.str() +
                "; input was not within delta of any admissible rational");

    // quotients_used must evaluate to the signed value; for negative inputs
    // the magnitude run's prefix cannot, so report the value's own canonical
    // expansion instead.
    continued_fraction used = input.is_negative() ? cf_expand(value) : raw;
    return recovery_result{std::move(value), std::move(used),
                           std::move(terminating), collapsed};
}

/// True iff `candidate` is THE rational with denominator <= n_bound near
/// `approx`: anything else with a denominator within the bound must differ
/// from approx by at least the uniqueness radius.
inline bool verify_unique(const rational& candidate, const decimal_approx& approx,
                          const bigint& n_bound) {
    if (candidate.denominator() > n_bound)
        throw std::invalid_argument(
            "verify_unique: candidate denominator exceeds the bound");
    return ratrec::abs(candidate - approx.to_rational()) < uniqueness_radius(n_bound);
}

}  // namespace ratrec
