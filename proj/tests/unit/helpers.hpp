#pragma once

// Shared generators for the unit tests. Seeds are fixed so failures are
// reproducible.

#include <random>
#include <vector>

#include <ratrec/continued_fraction.hpp>
#include <ratrec/rational.hpp>

namespace testhelp {

using ratrec::bigint;
using ratrec::rational;

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline bigint random_bigint_bits(std::mt19937_64& rng, unsigned bits) {
    bigint v = 0;
    for (unsigned produced = 0; produced < bits; produced += 32)
        v = (v << 32) | static_cast<std::uint32_t>(rng());
    return v >> ((32 - bits % 32) % 32);
}

/// Nonzero-denominator random rational, numerator possibly negative.
inline rational random_rational_bits(std::mt19937_64& rng, unsigned bits) {
    bigint num = random_bigint_bits(rng, bits);
    bigint den = random_bigint_bits(rng, bits) + 1;
    if (rng() & 1) num = -num;
    return rational(num, den);
}

/// Random canonical continued fraction: a0 in [-1000, 1000], later
/// quotients in [1, 1000], final one >= 2 when there is more than one.
inline ratrec::continued_fraction random_canonical_cf(std::mt19937_64& rng,
                                                      std::size_t max_len = 25) {
    std::size_t len = 1 + draw_below(rng, max_len);
    std::vector<bigint> q;
    q.reserve(len);
    q.push_back(bigint(static_cast<std::int64_t>(draw_below(rng, 2001))) - 1000);
    for (std::size_t i = 1; i < len; ++i)
        q.push_back(bigint(1 + draw_below(rng, 1000)));
    if (len > 1 && q.back() == 1) q.back() = 2;
    return ratrec::continued_fraction(std::move(q));
}

}  // namespace testhelp
