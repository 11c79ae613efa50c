#pragma once

#include <utility>
#include <vector>

#include "qiv/laurent.hpp"
#include "qiv/rational.hpp"

namespace qiv {

/// Dense univariate polynomial in q over the rationals, used as the
/// numerator/denominator representation inside RatFunc and for cyclotomic
/// arithmetic.  Coefficient of q^i at index i; trailing zeros trimmed.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly monomial(const Rational& c, unsigned long e);
    static QPoly from_laurent(const LaurentPoly& f);  // requires min_exp >= 0

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(unsigned long e) const { return e < coeffs_.size() ? coeffs_[e] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monomial() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    QPoly scaled(const Rational& c) const;
    QPoly monic() const;  // divide by leading coefficient

    /// Quotient and remainder of division by a nonzero polynomial.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    /// Exact division; throws if the remainder is nonzero.
    static QPoly exact_divide(const QPoly& a, const QPoly& b);
    /// Monic gcd over Q.
    static QPoly gcd(QPoly a, QPoly b);

    Rational eval(const Rational& v) const;
    LaurentPoly to_laurent() const;

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    std::string str() const { return to_laurent().str(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

} // namespace qiv
