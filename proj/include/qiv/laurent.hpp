#pragma once

#include <map>
#include <optional>
#include <string>

#include "qiv/rational.hpp"

namespace qiv {

/// Laurent polynomial in q with exact rational coefficients: a finitely
/// supported map exponent -> coefficient.  Exponents may be negative.
/// Invariant: no stored coefficient is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    LaurentPoly(const Rational& c, long e) {
        if (c != 0) terms_[e] = c;
    }

    static LaurentPoly monomial(const Rational& c, long e) { return LaurentPoly(c, e); }
    static LaurentPoly q_power(long e) { return LaurentPoly(1, e); }

    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of q^e (zero if absent).
    Rational coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long min_exp() const;  // throws on zero polynomial
    long max_exp() const;  // throws on zero polynomial

    /// True when every coefficient is an integer (element of Z[q,q^-1]).
    bool has_integer_coeffs() const;
    /// True when all exponents are >= 0 (lies in Q[q]).
    bool is_poly_in_q() const { return terms_.empty() || terms_.begin()->first >= 0; }
    /// True when all exponents are <= 0 (lies in Q[q^-1]).
    bool is_poly_in_qinv() const { return terms_.empty() || terms_.rbegin()->first <= 0; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    /// True when a single term c*q^e.
    bool is_monomial() const { return terms_.size() == 1; }

    void set_coeff(long e, const Rational& c) {
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = c;
    }
    void add_term(long e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const;
    /// Multiply by q^e.
    LaurentPoly shifted(long e) const;
    LaurentPoly pow(unsigned long n) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Exact value at a nonzero rational point (q := v); v = 0 allowed only
    /// when no negative exponents are present.
    Rational eval(const Rational& v) const;

    /// Canonical text: terms ascending by exponent, "c*q^e" with q^0 omitted,
    /// q^1 printed as "q", unit coefficients eliding "1*".
    std::string str() const;

private:
    std::map<long, Rational> terms_;
};

/// The involution q -> q^-1 applied termwise.
LaurentPoly bar_laurent(const LaurentPoly& f);

} // namespace qiv
