#pragma once

/**
 * @file continued_fraction.hpp
 * @brief Finite simple continued fractions [a0; a1, a2, ...] and their
 *        convergents.
 *
 * a0 may be any integer (floor-based expansion), all later partial quotients
 * are >= 1. The canonical form of a rational is the shorter of its two
 * representations: last quotient >= 2 unless there is only one element,
 * using [a0; ..., an, 1] = [a0; ..., an + 1].
 */

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ratrec {

class continued_fraction {
    std::vector<bigint> quotients_;

public:
    explicit continued_fraction(std::vector<bigint> quotients)
        : quotients_(std::move(quotients)) {
        if (quotients_.empty())
            throw std::invalid_argument("continued_fraction: empty quotient list");
        for (std::size_t i = 1; i < quotients_.size(); ++i)
            if (quotients_[i] < 1)
                throw std::invalid_argument(
                    "continued_fraction: partial quotient a" + std::to_string(i) +
                    " must be >= 1");
    }

    const std::vector<bigint>& quotients() const { return quotients_; }
    std::size_t size() const { return quotients_.size(); }
    const bigint& operator[](std::size_t i) const { return quotients_[i]; }

    bool is_canonical() const {
        return quotients_.size() == 1 || quotients_.back() >= 2;
    }

    bool operator==(const continued_fraction& o) const {
        return quotients_ == o.quotients_;
    }

    /// "[a0; a1, a2, ...]"
    std::string to_string() const {
        std::ostringstream os;
        os << "[" << quotients_[0].str();
        for (std::size_t i = 1; i < quotients_.size(); ++i)
            os << (i == 1 ? "; " : ", ") << quotients_[i].str();
        os << "]";
        return os.str();
    }

    /// Accepts "[a0; a1, a2]", "[a0, a1, a2]" or a bare "a0,a1,a2" list.
    static continued_fraction from_string(std::string_view text);
};

inline std::ostream& operator<<(std::ostream& os, const continued_fraction& cf) {
    return os << cf.to_string();
}

struct convergent_pair {
    bigint h;           // numerator
    bigint k;           // denominator, >= 1
    std::size_t index;  // n in h_n/k_n
};

/// Floor-based Euclidean expansion. Total on all rationals; the result is
/// canonical (the final quotient of a multi-term expansion is 1/b with
/// b in (0,1), hence >= 2).
inline continued_fraction cf_expand(const rational& x) {
    std::vector<bigint> q;
    bigint n = x.numerator();
    bigint d = x.denominator();
    for (;;) {
        bigint a = floor_div(n, d);
        q.push_back(a);
        bigint r = n - a * d;  // 0 <= r < d
        if (r == 0) break;
        n = d;
        d = r;
    }
    return continued_fraction(std::move(q));
}

/// Exact value via the convergent recurrence. Accepts non-canonical
/// (trailing-1) input.
inline rational cf_eval(const continued_fraction& cf) {
    bigint h_prev = 1, h_prev2 = 0;  // h_{-1}, h_{-2}
    bigint k_prev = 0, k_prev2 = 1;  // k_{-1}, k_{-2}
    for (const bigint& a : cf.quotients()) {
        bigint h = a * h_prev + h_prev2;
        bigint k = a * k_prev + k_prev2;
        h_prev2 = std::exchange(h_prev, std::move(h));
        k_prev2 = std::exchange(k_prev, std::move(k));
    }
    return rational(h_prev, k_prev);
}

/// All convergents h_0/k_0 ... h_L/k_L. Each pair is automatically in lowest
/// terms by the determinant identity k_n h_{n-1} - k_{n-1} h_n = (-1)^n.
inline std::vector<convergent_pair> convergents(const continued_fraction& cf) {
    std::vector<convergent_pair> out;
    out.reserve(cf.size());
    bigint h_prev = 1, h_prev2 = 0;
    bigint k_prev = 0, k_prev2 = 1;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        bigint h = cf[i] * h_prev + h_prev2;
        bigint k = cf[i] * k_prev + k_prev2;
        out.push_back({h, k, i});
        h_prev2 = std::exchange(h_prev, std::move(h));
        k_prev2 = std::exchange(k_prev, std::move(k));
    }
    return out;
}

/// Folds a trailing quotient of 1 into its predecessor; value preserved.
/// Idempotent.
inline continued_fraction cf_canonicalize(const continued_fraction& cf) {
    if (cf.size() > 1 && cf[cf.size() - 1] == 1) {
        std::vector<bigint> q(cf.quotients().begin(), cf.quotients().end() - 1);
        q.back() += 1;
        return continued_fraction(std::move(q));
    }
    return cf;
}

inline continued_fraction continued_fraction::from_string(std::string_view text) {
    std::string buf;
    buf.reserve(text.size());
    for (char c : text) {
        if (c == '[' || c == ']' || c == ' ' || c == '\t') continue;
        buf += (c == ';') ? ',' : c;
    }
    if (buf.empty())
        throw std::invalid_argument("continued_fraction: empty input");
    std::vector<bigint> q;
    std::size_t pos = 0;
    while (pos <= buf.size()) {
        std::size_t comma = buf.find(',', pos);
        std::string tok = buf.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
        if (tok.empty())
            throw std::invalid_argument("continued_fraction: empty quotient token");
        rational r = rational::from_string(tok);
        if (!r.is_integer())
            throw std::invalid_argument("continued_fraction: quotient is not an integer");
        q.push_back(r.numerator());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return continued_fraction(std::move(q));
}

}  // namespace ratrec
