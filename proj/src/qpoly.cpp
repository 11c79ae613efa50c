#include "qiv/qpoly.hpp"

namespace qiv {

QPoly QPoly::monomial(const Rational& c, unsigned long e) {
    QPoly r;
    if (c == 0) return r;
    r.coeffs_.assign(e + 1, Rational(0));
    r.coeffs_[e] = c;
    return r;
}

QPoly QPoly::from_laurent(const LaurentPoly& f) {
    QPoly r;
    if (f.is_zero()) return r;
    if (f.min_exp() < 0) throw domain_violation_error("negative exponent in polynomial context: " + f.str());
    r.coeffs_.assign(static_cast<size_t>(f.max_exp()) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) r.coeffs_[static_cast<size_t>(e)] = c;
    return r;
}

bool QPoly::is_monomial() const {
    if (coeffs_.empty()) return false;
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const Rational& c) const {
    QPoly r;
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw zero_denominator_error("polynomial division by zero");
    QPoly rem = a;
    QPoly quot;
    long db = b.degree();
    if (rem.degree() >= db) quot.coeffs_.assign(static_cast<size_t>(rem.degree() - db) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        long shift = rem.degree() - db;
        Rational factor = rem.leading() / b.leading();
        quot.coeffs_[static_cast<size_t>(shift)] = factor;
        for (long i = 0; i <= db; ++i) {
            if (b.coeffs_[static_cast<size_t>(i)] == 0) continue;
            rem.coeffs_[static_cast<size_t>(i + shift)] -= factor * b.coeffs_[static_cast<size_t>(i)];
        }
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

QPoly QPoly::exact_divide(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw domain_violation_error("inexact polynomial division");
    return q;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();  // keep coefficients tame
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Rational QPoly::eval(const Rational& v) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

LaurentPoly QPoly::to_laurent() const {
    LaurentPoly r;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.set_coeff(static_cast<long>(i), coeffs_[i]);
    return r;
}

} // namespace qiv
