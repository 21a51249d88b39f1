#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Invariants maintained by every constructor and operation:
 *   - denominator > 0 (sign carried by the numerator)
 *   - gcd(|numerator|, denominator) = 1
 *   - zero is 0/1
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ratrec {

using bigint = boost::multiprecision::cpp_int;

/// Floor division (cpp_int's operator/ truncates toward zero).
inline bigint floor_div(const bigint& a, const bigint& b) {
    bigint q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

class rational {
    bigint num_;
    bigint den_;  // > 0

    void reduce() {
        if (den_ == 0) throw std::domain_error("rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

public:
    rational() : num_(0), den_(1) {}
    rational(int n) : num_(n), den_(1) {}
    rational(bigint n) : num_(std::move(n)), den_(1) {}
    rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const bigint& numerator() const { return num_; }
    const bigint& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    /// Largest integer <= *this.
    bigint floor() const { return floor_div(num_, den_); }

    rational operator-() const {
        rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    rational operator+(const rational& o) const {
        return rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    rational operator-(const rational& o) const {
        return rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    rational operator*(const rational& o) const {
        return rational(num_ * o.num_, den_ * o.den_);
    }
    rational operator/(const rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        return rational(num_ * o.den_, den_ * o.num_);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("rational: reciprocal of zero");
        return rational(den_, num_);
    }

    bool operator==(const rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const rational& o) const {
        bigint lhs = num_ * o.den_;
        bigint rhs = o.num_ * den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    /// "p/q", or just "p" for integers.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on junk.
    static rational from_string(std::string_view text);
};

inline rational abs(const rational& r) { return r.is_negative() ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const rational& r) {
    return os << r.to_string();
}

inline rational rational::from_string(std::string_view text) {
    auto parse_int = [](std::string_view s) -> bigint {
        if (s.empty()) throw std::invalid_argument("rational: empty integer");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("rational: bare sign");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("rational: bad digit in '" + std::string(s) + "'");
        return bigint(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return rational(parse_int(text));
    return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace ratrec
