#pragma once

/**
 * @file decimal.hpp
 * @brief Exact decimal literals.
 *
 * A decimal_approx is the literal itself -- sign, integer part and fraction
 * digits -- not a binary float. It converts losslessly to a rational, so
 * everything downstream runs in exact arithmetic.
 */

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "rational.hpp"

namespace ratrec {

class decimal_approx {
    bool negative_ = false;
    bigint int_part_ = 0;       // >= 0
    std::string frac_digits_;   // possibly empty

    decimal_approx() = default;

public:
    decimal_approx(bool negative, bigint int_part, std::string frac_digits)
        : negative_(negative),
          int_part_(std::move(int_part)),
          frac_digits_(std::move(frac_digits)) {
        if (int_part_ < 0)
            throw std::invalid_argument("decimal_approx: negative integer part");
        for (char c : frac_digits_)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("decimal_approx: non-digit fraction char");
    }

    bool is_negative() const { return negative_; }
    const bigint& integer_part() const { return int_part_; }
    const std::string& fraction_digits() const { return frac_digits_; }

    /// Exact value sign * (int_part + frac/10^len).
    rational to_rational() const {
        bigint scale = 1;
        bigint frac = 0;
        for (char c : frac_digits_) {
            frac = frac * 10 + (c - '0');
            scale *= 10;
        }
        rational v = rational(int_part_ * scale + frac, scale);
        return negative_ ? -v : v;
    }

    /// The literal, digits preserved (including trailing zeros).
    std::string to_string() const {
        std::string s = negative_ ? "-" : "";
        s += int_part_.str();
        if (!frac_digits_.empty()) {
            s += '.';
            s += frac_digits_;
        }
        return s;
    }

    /// Parses "137", "0.5", ".5", "-.375", "1.882434634". No exponents.
    static decimal_approx parse(std::string_view text) {
        std::string_view s = text;
        bool neg = false;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            neg = (s[0] == '-');
            s.remove_prefix(1);
        }
        auto dot = s.find('.');
        std::string_view ip = (dot == std::string_view::npos) ? s : s.substr(0, dot);
        std::string_view fp = (dot == std::string_view::npos) ? std::string_view{}
                                                              : s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw std::invalid_argument("decimal_approx: no digits in '" +
                                        std::string(text) + "'");
        for (std::string_view part : {ip, fp})
            for (char c : part)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("decimal_approx: bad character in '" +
                                                std::string(text) + "'");
        bigint int_part = ip.empty() ? bigint(0) : bigint(std::string(ip));
        return decimal_approx(neg, std::move(int_part), std::string(fp));
    }

    /// Correctly rounded decimal with `digits` fraction digits
    /// (round to nearest, ties away from zero).
    static decimal_approx from_rational(const rational& x, unsigned digits) {
        bigint pow10 = 1;
        for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
        bigint n = boost::multiprecision::abs(x.numerator()) * pow10;
        bigint q = n / x.denominator();
        bigint r = n % x.denominator();
        if (2 * r >= x.denominator()) ++q;
        std::string all = q.str();
        std::string frac;
        bigint int_part;
        if (digits == 0) {
            int_part = q;
        } else if (all.size() <= digits) {
            int_part = 0;
            frac = std::string(digits - all.size(), '0') + all;
        } else {
            int_part = bigint(all.substr(0, all.size() - digits));
            frac = all.substr(all.size() - digits);
        }
        return decimal_approx(x.is_negative(), std::move(int_part), std::move(frac));
    }
};

inline std::ostream& operator<<(std::ostream& os, const decimal_approx& d) {
    return os << d.to_string();
}

}  // namespace ratrec
