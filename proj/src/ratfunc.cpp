#include "qiv/ratfunc.hpp"

namespace qiv {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw zero_denominator_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    if (!den_.is_one()) {
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = QPoly::exact_divide(num_, g);
            den_ = QPoly::exact_divide(den_, g);
        }
    }
    if (den_.leading() != 1) {
        Rational lc = den_.leading();
        num_ = num_.scaled(Rational(1) / lc);
        den_ = den_.scaled(Rational(1) / lc);
    }
}

RatFunc RatFunc::from_laurent(const LaurentPoly& f) {
    if (f.is_zero()) return RatFunc();
    long m = f.min_exp();
    if (m >= 0) {
        RatFunc r;
        r.num_ = QPoly::from_laurent(f);
        return r;
    }
    // f = g / q^{-m} with g a genuine polynomial; q does not divide g.
    RatFunc r;
    r.num_ = QPoly::from_laurent(f.shifted(-m));
    r.den_ = QPoly::monomial(Rational(1), static_cast<unsigned long>(-m));
    return r;
}

RatFunc RatFunc::q_power(long e) { return from_laurent(LaurentPoly(Rational(1), e)); }

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw zero_denominator_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rational(1));
    RatFunc base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    RatFunc acc(Rational(1));
    while (n > 0) {
        if (n & 1) acc *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
    if (den_.is_one()) return num_.to_laurent();
    if (!den_.is_monomial()) return std::nullopt;
    return num_.to_laurent().shifted(-den_.degree());
}

bool RatFunc::is_integral_laurent() const {
    auto l = as_laurent();
    return l && l->has_integer_coeffs();
}

RatFunc RatFunc::bar() const {
    return RatFunc::from_laurent(bar_laurent(num_.to_laurent())) /
           RatFunc::from_laurent(bar_laurent(den_.to_laurent()));
}

Rational RatFunc::eval(const Rational& v) const {
    Rational d = den_.eval(v);
    if (d == 0) {
        if (v == 1) throw pole_at_one_error("pole at q = 1");
        throw zero_denominator_error("pole at q = " + v.str());
    }
    return num_.eval(v) / d;
}

std::string RatFunc::str() const {
    if (auto l = as_laurent()) return l->str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace qiv
