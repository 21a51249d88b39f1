#pragma once

/**
 * @file polynomial.hpp
 * @brief Multivariate polynomials with exact rational coefficients, their
 *        approximately-known counterparts, and coefficient-wise exact
 *        recovery.
 *
 * Text grammar (whitespace insignificant):
 *   poly   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := coeff | var ('^' uint)?
 *   coeff  := int | int '/' int | decimal
 *   var    := identifier
 */

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decimal.hpp"
#include "planner.hpp"
#include "rational.hpp"
#include "recovery.hpp"

namespace ratrec {

struct monomial {
    std::map<std::string, unsigned> exponents;  // no zero exponents stored

    monomial() = default;

    static monomial var(const std::string& name, unsigned exp = 1) {
        monomial m;
        if (exp > 0) m.exponents[name] = exp;
        return m;
    }

    bool is_constant() const { return exponents.empty(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [_, e] : exponents) d += e;
        return d;
    }

    unsigned exponent_of(const std::string& name) const {
        auto it = exponents.find(name);
        return it == exponents.end() ? 0u : it->second;
    }

    monomial operator*(const monomial& o) const {
        monomial m = *this;
        for (const auto& [name, e] : o.exponents) m.exponents[name] += e;
        return m;
    }

    bool operator==(const monomial& o) const { return exponents == o.exponents; }

    /// "x^2*y" -- variables alphabetical, unit exponents bare, constant "1".
    std::string to_string() const {
        if (is_constant()) return "1";
        std::string s;
        for (const auto& [name, e] : exponents) {
            if (!s.empty()) s += '*';
            s += name;
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

namespace detail {

/// Graded-lex comparison; `first_var`, when nonempty, outranks the
/// alphabetical order. Returns <0, 0, >0 as a is below, equal to, above b.
inline int grlex_compare(const monomial& a, const monomial& b,
                         const std::string& first_var = {}) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    if (!first_var.empty()) {
        unsigned ea = a.exponent_of(first_var), eb = b.exponent_of(first_var);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    auto ia = a.exponents.begin(), ib = b.exponents.begin();
    while (ia != a.exponents.end() || ib != b.exponents.end()) {
        if (ia != a.exponents.end() && ia->first == first_var) { ++ia; continue; }
        if (ib != b.exponents.end() && ib->first == first_var) { ++ib; continue; }
        if (ia == a.exponents.end()) return -1;  // b has an extra variable
        if (ib == b.exponents.end()) return 1;
        if (ia->first != ib->first)
            // earlier variable name with a positive exponent ranks higher
            return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    return 0;
}

}  // namespace detail

/// Map order for polynomial terms: leading (grlex-greatest) first.
struct grlex_descending {
    bool operator()(const monomial& a, const monomial& b) const {
        return detail::grlex_compare(a, b) > 0;
    }
};

class exact_polynomial {
    std::map<monomial, rational, grlex_descending> terms_;

public:
    exact_polynomial() = default;

    static exact_polynomial constant(const rational& c) {
        exact_polynomial p;
        p.add_term(monomial{}, c);
        return p;
    }

    void add_term(const monomial& m, const rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<monomial, rational, grlex_descending>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }

    rational coefficient(const monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? rational() : it->second;
    }

    exact_polynomial operator+(const exact_polynomial& o) const {
        exact_polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    exact_polynomial operator-(const exact_polynomial& o) const {
        exact_polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    exact_polynomial operator*(const rational& s) const {
        exact_polynomial r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    bool operator==(const exact_polynomial& o) const { return terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            rational mag = abs(c);
            if (s.empty()) {
                if (c.is_negative()) s += '-';
            } else {
                s += c.is_negative() ? " - " : " + ";
            }
            if (m.is_constant()) {
                s += mag.to_string();
            } else if (mag == rational(1)) {
                s += m.to_string();
            } else {
                s += mag.to_string() + "*" + m.to_string();
            }
        }
        return s;
    }
};

/// Exact distributive product in canonical form.
inline exact_polynomial multiply(const exact_polynomial& a,
                                 const exact_polynomial& b) {
    exact_polynomial r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

inline exact_polynomial operator*(const exact_polynomial& a,
                                  const exact_polynomial& b) {
    return multiply(a, b);
}

class approx_polynomial {
    std::map<monomial, decimal_approx, grlex_descending> terms_;
    rational stated_accuracy_;

public:
    approx_polynomial(std::map<monomial, decimal_approx, grlex_descending> terms,
                      rational stated_accuracy)
        : terms_(std::move(terms)), stated_accuracy_(std::move(stated_accuracy)) {
        if (!(stated_accuracy_ > rational(0)))
            throw std::invalid_argument("approx_polynomial: accuracy must be > 0");
    }

    const std::map<monomial, decimal_approx, grlex_descending>& terms() const {
        return terms_;
    }
    const rational& stated_accuracy() const { return stated_accuracy_; }
};

// ---------------------------------------------------------------------------
// parsing

namespace detail {

class poly_parser {
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += text_[pos_++];
        return out;
    }

    // int, int/int or decimal; leading '.' allowed (".625")
    rational read_number() {
        skip_ws();
        std::string ip = read_digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::string fp = read_digits();
            if (ip.empty() && fp.empty()) fail("expected digits around '.'");
            return decimal_approx(false, ip.empty() ? bigint(0) : bigint(ip), fp)
                .to_rational();
        }
        if (ip.empty()) fail("expected a number");
        bigint numerator(ip);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::string dp = read_digits();
            if (dp.empty()) fail("expected denominator after '/'");
            return rational(numerator, bigint(dp));
        }
        return rational(std::move(numerator));
    }

    std::string read_identifier() {
        skip_ws();
        std::string out;
        if (pos_ < text_.size() &&
            (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
             text_[pos_] == '_'))
            out += text_[pos_++];
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            out += text_[pos_++];
        return out;
    }

    // coeff factor or var('^' uint)?; multiplies into (coeff, mono)
    void read_factor(rational& coeff, monomial& mono) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            coeff *= read_number();
            return;
        }
        std::string name = read_identifier();
        if (name.empty()) fail("expected a coefficient or variable");
        unsigned exp = 1;
        if (consume('^')) {
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) fail("expected exponent after '^'");
            if (digits.size() > 6) fail("exponent too large");
            exp = static_cast<unsigned>(std::stoul(digits));
        }
        mono = mono * monomial::var(name, exp);
    }

public:
    explicit poly_parser(std::string_view text) : text_(text) {}

    exact_polynomial parse() {
        exact_polynomial poly;
        bool negative = false;
        if (consume('-'))
            negative = true;
        else
            consume('+');
        if (peek() == '\0') fail("empty polynomial");
        for (;;) {
            rational coeff(1);
            monomial mono;
            read_factor(coeff, mono);
            while (consume('*')) read_factor(coeff, mono);
            poly.add_term(mono, negative ? -coeff : coeff);
            char c = peek();
            if (c == '\0') break;
            if (c == '+')
                negative = false;
            else if (c == '-')
                negative = true;
            else
                fail(std::string("unexpected character '") + c + "'");
            ++pos_;
        }
        return poly;
    }
};

/// Exact rational -> decimal literal; requires a 2^a*5^b denominator.
inline decimal_approx to_decimal_exact(const rational& x) {
    bigint d = x.denominator();
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1)
        throw std::invalid_argument("coefficient " + x.to_string() +
                                    " has no finite decimal representation");
    return decimal_approx::from_rational(x, twos > fives ? twos : fives);
}

}  // namespace detail

inline exact_polynomial parse_polynomial(std::string_view text) {
    return detail::poly_parser(text).parse();
}

/// Parses an approximate polynomial: every coefficient must have a finite
/// decimal form (decimal literals, integers, 2^a*5^b fractions).
inline approx_polynomial parse_approx_polynomial(std::string_view text,
                                                 const rational& stated_accuracy) {
    exact_polynomial p = parse_polynomial(text);
    std::map<monomial, decimal_approx, grlex_descending> terms;
    for (const auto& [m, c] : p.terms())
        terms.emplace(m, detail::to_decimal_exact(c));
    return approx_polynomial(std::move(terms), stated_accuracy);
}

// ---------------------------------------------------------------------------
// operations

struct monic_result {
    exact_polynomial monic;
    bigint denominator_bound;  // lcm of coefficient denominators, >= 2
};

/// Divides by the leading coefficient (graded-lex with `leading_var`
/// outranking the other variables) and reports the lcm of the resulting
/// coefficient denominators, which bounds the denominators of monic-factor
/// coefficients. Integer-polynomial lcm of 1 is clamped to 2 so the result
/// is always a valid planning bound.
inline monic_result monic_transform(const exact_polynomial& p,
                                    const std::string& leading_var) {
    if (p.is_zero()) throw std::invalid_argument("monic_transform: zero polynomial");
    const monomial* lead = nullptr;
    for (const auto& [m, _] : p.terms())
        if (!lead || detail::grlex_compare(m, *lead, leading_var) > 0) lead = &m;
    if (lead->exponent_of(leading_var) == 0)
        throw std::invalid_argument(
            "monic_transform: leading term " + lead->to_string() +
            " does not contain variable '" + leading_var + "'");
    rational lc = p.coefficient(*lead);
    exact_polynomial monic = p * lc.reciprocal();
    bigint l = 1;
    for (const auto& [_, c] : monic.terms())
        l = l / gcd(l, c.denominator()) * c.denominator();
    if (l < 2) l = 2;
    return monic_result{std::move(monic), std::move(l)};
}

/// Coefficient-wise recovery with plan(n_bound). A coefficient whose
/// recovery breaks the denominator bound aborts with the offending monomial
/// named in the error.
inline exact_polynomial recover_polynomial(const approx_polynomial& g,
                                           const bigint& n_bound) {
    precision_plan plan = plan_for_denominator_bound(n_bound);
    if (g.stated_accuracy() > plan.delta)
        throw std::invalid_argument(
            "recover_polynomial: stated accuracy " +
            g.stated_accuracy().to_string() + " is weaker than the plan's delta " +
            plan.delta.to_string());
    exact_polynomial out;
    for (const auto& [m, dec] : g.terms()) {
        try {
            out.add_term(m, recover(dec, plan).value);
        } catch (const contract_violation& e) {
            throw contract_violation(e.recovered(), e.n_bound(),
                                     "coefficient of " + m.to_string() + ": " +
                                         e.what());
        }
    }
    return out;
}

/// True iff scalar * product(factors) == p, by exact multiplication.
inline bool verify_factorization(const exact_polynomial& p,
                                 const std::vector<exact_polynomial>& factors,
                                 const rational& scalar) {
    exact_polynomial prod = exact_polynomial::constant(scalar);
    for (const exact_polynomial& f : factors) prod = multiply(prod, f);
    return prod == p;
}

inline std::ostream& operator<<(std::ostream& os, const exact_polynomial& p) {
    return os << p.to_string();
}

}  // namespace ratrec
