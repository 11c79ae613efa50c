#include "qiv/laurent.hpp"

#include <sstream>

namespace qiv {

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw domain_violation_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw domain_violation_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

bool LaurentPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!is_integral(c)) return false;
    return true;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly r;
    for (const auto& [ex, v] : terms_) r.terms_[ex + e] = v;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
    LaurentPoly acc(Rational(1));
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

Rational LaurentPoly::eval(const Rational& v) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e >= 0) {
            Rational p = 1;
            for (long i = 0; i < e; ++i) p *= v;
            acc += c * p;
        } else {
            if (v == 0) throw zero_denominator_error("evaluating negative power of q at 0");
            Rational p = 1;
            for (long i = 0; i < -e; ++i) p *= v;
            acc += c / p;
        }
    }
    return acc;
}

LaurentPoly bar_laurent(const LaurentPoly& f) {
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) r.set_coeff(-e, c);
    return r;
}

namespace {

void append_coeff(std::ostringstream& out, const Rational& c, bool with_power) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (a == 1 && with_power) return;
    out << a.str();
    if (with_power) out << "*";
}

} // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            Rational a = c < 0 ? Rational(-c) : c;
            out << a.str();
            continue;
        }
        append_coeff(out, c, true);
        out << "q";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

} // namespace qiv
