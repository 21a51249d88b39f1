#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ground-truth engines for best rational approximation
 *        under a denominator bound.
 *
 * Deliberately share no code with the continued-fraction expansion they are
 * used to validate: the fast engine walks the Stern-Brocot tree by mediants,
 * the slow one enumerates every candidate denominator, and the gap scan
 * iterates the Farey sequence.
 */

#include <stdexcept>

#include "decimal.hpp"
#include "rational.hpp"

namespace ratrec {

namespace detail {

// smaller distance wins; ties go to the smaller denominator, then the
// smaller numerator
inline bool better_candidate(const rational& cand, const rational& best,
                             const rational& target) {
    rational dc = abs(target - cand);
    rational db = abs(target - best);
    if (dc != db) return dc < db;
    if (cand.denominator() != best.denominator())
        return cand.denominator() < best.denominator();
    return cand.numerator() < best.numerator();
}

}  // namespace detail

/// Closest p/q to `x` with q <= n_bound, by mediant descent between the
/// integer neighbors of x. Any fraction strictly inside the final interval
/// has denominator beyond the bound, so the answer is one of the endpoints.
inline rational best_approx_bounded_denominator(const rational& x,
                                                const bigint& n_bound) {
    if (n_bound < 1)
        throw std::invalid_argument("best_approx_bounded_denominator: bound < 1");
    bigint lo_n = x.floor(), lo_d = 1;
    bigint hi_n = lo_n + 1, hi_d = 1;
    if (rational(lo_n) == x) return x;
    for (;;) {
        bigint med_n = lo_n + hi_n;
        bigint med_d = lo_d + hi_d;
        if (med_d > n_bound) break;
        rational med(med_n, med_d);
        if (x < med) {
            hi_n = std::move(med_n);
            hi_d = std::move(med_d);
        } else if (x > med) {
            lo_n = std::move(med_n);
            lo_d = std::move(med_d);
        } else {
            return med;
        }
    }
    rational lo(lo_n, lo_d), hi(hi_n, hi_d);
    return detail::better_candidate(hi, lo, x) ? hi : lo;
}

inline rational best_approx_bounded_denominator(const decimal_approx& approx,
                                                const bigint& n_bound) {
    return best_approx_bounded_denominator(approx.to_rational(), n_bound);
}

/// Brute force over every denominator q <= n_bound, numerators within one
/// of q*x. Last-resort truth for cross-checking the mediant engine.
inline rational exhaustive_best_approx(const rational& x, const bigint& n_bound) {
    if (n_bound < 1)
        throw std::invalid_argument("exhaustive_best_approx: bound < 1");
    if (n_bound > 2000)
        throw std::invalid_argument(
            "exhaustive_best_approx: bound > 2000 (cost guard)");
    rational best(x.floor());
    for (bigint q = 1; q <= n_bound; ++q) {
        bigint p0 = floor_div(x.numerator() * q, x.denominator());
        for (int off = -1; off <= 2; ++off) {
            rational cand(p0 + off, q);
            if (detail::better_candidate(cand, best, x)) best = cand;
        }
    }
    return best;
}

inline rational exhaustive_best_approx(const decimal_approx& approx,
                                       const bigint& n_bound) {
    return exhaustive_best_approx(approx.to_rational(), n_bound);
}

/// Minimum distance between distinct reduced fractions in [0,1] with
/// denominators <= n_bound, by walking the Farey sequence of that order
/// with the standard next-term recurrence.
inline rational min_pairwise_gap(const bigint& n_bound) {
    if (n_bound < 2)
        throw std::invalid_argument("min_pairwise_gap: bound must be >= 2");
    if (n_bound > 300)
        throw std::invalid_argument("min_pairwise_gap: bound > 300 (cost guard)");
    bigint a = 0, b = 1;        // current term a/b
    bigint c = 1, d = n_bound;  // successor c/d
    rational min_gap = rational(c, d) - rational(a, b);
    while (c != 1 || d != 1) {
        bigint k = (n_bound + b) / d;
        bigint e = k * c - a;
        bigint f = k * d - b;
        a = std::exchange(c, std::move(e));
        b = std::exchange(d, std::move(f));
        rational gap = rational(c, d) - rational(a, b);
        if (gap < min_gap) min_gap = gap;
    }
    return min_gap;
}

}  // namespace ratrec
