#pragma once

#include <optional>
#include <vector>

#include "qiv/qnum.hpp"
#include "qiv/ratfunc.hpp"

namespace qiv {

/// Polynomial in x over Q(q).  Held internally over a common denominator:
/// P = (sum num_i x^i) / den with Laurent numerators and a monic polynomial
/// denominator in q.  Coefficients are exposed as reduced RatFuncs.
class XPoly {
public:
    XPoly() : den_(Rational(1)) {}

    static XPoly zero() { return XPoly(); }
    static XPoly constant(const RatFunc& c);
    static XPoly constant(const LaurentPoly& c);
    static XPoly x();
    static XPoly from_coeffs(const std::vector<RatFunc>& coeffs);
    /// (sum num_i x^i) / den.
    static XPoly from_parts(std::vector<LaurentPoly> nums, QPoly den);

    bool is_zero() const { return num_.empty(); }
    /// Degree, or nullopt for the zero polynomial.
    std::optional<size_t> degree() const {
        if (num_.empty()) return std::nullopt;
        return num_.size() - 1;
    }

    /// Reduced coefficient of x^i.
    RatFunc coeff(size_t i) const;
    std::vector<RatFunc> coeffs() const;

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    XPoly scaled(const RatFunc& c) const;
    XPoly scaled(const LaurentPoly& c) const;

    /// Substitution x := inner.
    XPoly compose(const XPoly& inner) const;

    /// Exact value at x := [n]_q.
    RatFunc eval_at_qint(long n) const;
    /// Exact value at an arbitrary point of Q(q).
    RatFunc eval(const RatFunc& point) const;

    bool operator==(const XPoly& o) const;
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim();
    std::vector<LaurentPoly> num_;
    QPoly den_;  // monic, nonzero
};

/// The basis polynomial qbinom(x, k) =
/// x (x-[1]_q) ... (x-[k-1]_q) / (q^binom(k,2) [k]_q!), with qbinom(x,0) = 1.
/// Memoized.
XPoly qbinom_poly(unsigned long k);

/// The bar involution q -> q^-1, x -> -qx.
XPoly bar_xpoly(const XPoly& p);

/// Substitution for S^m: x -> q^m x + [m]_q, so that
/// (shift_xpoly(P, m))([n]_q) = P([n+m]_q).
XPoly shift_xpoly(const XPoly& p, long m);

/// The dilation substitution D_m(x) = (((q-1)x+1)^m - 1)/(q-1) as an XPoly,
/// satisfying D_m(P)([n]_q) = P([mn]_q).
XPoly dilation_poly(unsigned long m);

} // namespace qiv
