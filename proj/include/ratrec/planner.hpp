#pragma once

/**
 * @file planner.hpp
 * @brief Precision planning: how accurate must an approximation be, and when
 *        may the expansion stop, for exact recovery of a rational whose
 *        denominator is bounded by N.
 *
 * For a denominator bound N >= 2 the plan fixes
 *   K       = N + 1                      (stop threshold)
 *   delta   = 1 / ((2K+2) * N * (N-1))   (required accuracy radius)
 *   epsilon = 1 / K                      (remainder stop tolerance)
 * and the minimal count of decimal fraction digits d with 10^-d <= delta/2,
 * so a correctly rounded d-digit literal always sits within delta of its
 * target.
 */

#include <stdexcept>

#include "rational.hpp"

namespace ratrec {

struct precision_plan {
    bigint n_bound;         // N >= 2
    bigint k_threshold;     // K
    rational delta;         // accuracy the approximation must meet
    rational epsilon_stop;  // expansion stop tolerance
    unsigned decimal_digits;
};

/// Any two distinct rationals with denominators <= N are at least
/// 1/(N(N-1)) apart, so within 1/(2N(N-1)) of any point there is at most
/// one of them.
inline rational uniqueness_radius(const bigint& n_bound) {
    if (n_bound < 2)
        throw std::invalid_argument("uniqueness_radius: bound must be >= 2");
    return rational(1, 2 * n_bound * (n_bound - 1));
}

inline precision_plan plan_for_denominator_bound(const bigint& n_bound) {
    if (n_bound < 2)
        throw std::invalid_argument("plan_for_denominator_bound: bound must be >= 2");
    precision_plan p;
    p.n_bound = n_bound;
    p.k_threshold = n_bound + 1;
    bigint inv_delta = (2 * p.k_threshold + 2) * n_bound * (n_bound - 1);
    p.delta = rational(1, inv_delta);
    p.epsilon_stop = rational(1, p.k_threshold);
    bigint pow10 = 1;
    unsigned digits = 0;
    while (pow10 < 2 * inv_delta) {  // 10^-d <= delta/2
        pow10 *= 10;
        ++digits;
    }
    p.decimal_digits = digits;
    return p;
}

}  // namespace ratrec
