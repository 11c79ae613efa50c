#pragma once

#include <optional>
#include <string>

#include "qiv/qpoly.hpp"

namespace qiv {

/// Element of Q(q): a reduced fraction of polynomials in q.
/// Canonical form: denominator monic and nonzero, gcd(num, den) = 1.
/// Two RatFuncs are equal iff their fields are identical.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(QPoly num, QPoly den);  // normalizes; throws ZeroDenominator
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}

    static RatFunc from_laurent(const LaurentPoly& f);
    static RatFunc q_power(long e);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws ZeroDenominator
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const { return RatFunc(den_, num_); }
    RatFunc pow(long e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Laurent form when the denominator is a power of q; nullopt otherwise.
    std::optional<LaurentPoly> as_laurent() const;
    /// True when the value lies in Z[q,q^-1].
    bool is_integral_laurent() const;

    /// The involution q -> q^-1.
    RatFunc bar() const;

    /// Exact evaluation at q := v; throws PoleAtOne when v = 1 is a pole,
    /// ZeroDenominator for other poles.
    Rational eval(const Rational& v) const;

    /// Laurent text when Laurent, otherwise "(num)/(den)".
    std::string str() const;

private:
    QPoly num_;
    QPoly den_;
};

/// Canonical reduced fraction num/den (the spec's ratfunc_normalize).
inline RatFunc ratfunc_normalize(const QPoly& num, const QPoly& den) { return RatFunc(num, den); }

} // namespace qiv
