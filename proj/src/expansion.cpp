#include "qiv/expansion.hpp"

#include <mutex>
#include <sstream>

namespace qiv {

void QBinExpansion::add_coeff(unsigned long k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

std::string QBinExpansion::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) out << "\n";
        first = false;
        out << k << ": " << c.str();
    }
    return out.str();
}

QBinExpansion expand(const XPoly& p) {
    QBinExpansion result(Basis::Standard);
    if (p.is_zero()) return result;
    size_t d = *p.degree();
    std::vector<RatFunc> values(d + 1);
    for (size_t n = 0; n <= d; ++n) values[n] = p.eval_at_qint(static_cast<long>(n));
    // partial[n] tracks (sum of chosen terms so far)([n]_q)
    std::vector<RatFunc> partial(d + 1);
    for (size_t k = 0; k <= d; ++k) {
        RatFunc c = values[k] - partial[k];
        if (c.is_zero()) continue;
        result.set_coeff(k, c);
        for (size_t n = k + 1; n <= d; ++n)
            partial[n] += c * RatFunc::from_laurent(q_binomial(n, static_cast<long>(k)));
    }
    return result;
}

XPoly synthesize(const QBinExpansion& e) {
    XPoly acc;
    for (const auto& [k, c] : e.coeffs()) {
        XPoly basis_poly = qbinom_poly(k);
        if (e.basis() == Basis::Bar) basis_poly = bar_xpoly(basis_poly);
        acc += basis_poly.scaled(c);
    }
    return acc;
}

namespace {

std::mutex sc_mutex;
std::map<std::pair<unsigned long, unsigned long>, std::map<unsigned long, LaurentPoly>> sc_cache;
std::map<std::pair<unsigned long, unsigned long>, std::map<unsigned long, LaurentPoly>> sc_bar_cache;

// [k]! / ([k-i]! [k-j]! [i+j-k]!) as the product of two Gaussian binomials,
// which keeps everything in N[q] with no division.
LaurentPoly q_multinomial(unsigned long i, unsigned long j, unsigned long k) {
    return q_binomial(k, static_cast<long>(i + j - k)) *
           q_binomial(2 * k - i - j, static_cast<long>(k - i));
}

} // namespace

std::map<unsigned long, LaurentPoly> struct_const(unsigned long i, unsigned long j) {
    {
        std::lock_guard<std::mutex> lock(sc_mutex);
        auto it = sc_cache.find({i, j});
        if (it != sc_cache.end()) return it->second;
    }
    std::map<unsigned long, LaurentPoly> r;
    for (unsigned long k = std::max(i, j); k <= i + j; ++k) {
        long e = static_cast<long>(k - i) * static_cast<long>(k - j);
        r[k] = q_multinomial(i, j, k).shifted(e);
    }
    std::lock_guard<std::mutex> lock(sc_mutex);
    return sc_cache.emplace(std::make_pair(i, j), std::move(r)).first->second;
}

std::map<unsigned long, LaurentPoly> struct_const_bar(unsigned long i, unsigned long j) {
    {
        std::lock_guard<std::mutex> lock(sc_mutex);
        auto it = sc_bar_cache.find({i, j});
        if (it != sc_bar_cache.end()) return it->second;
    }
    std::map<unsigned long, LaurentPoly> r;
    for (unsigned long k = std::max(i, j); k <= i + j; ++k) {
        long e = static_cast<long>(i) * (static_cast<long>(i) - static_cast<long>(k)) +
                 static_cast<long>(j) * (static_cast<long>(j) - static_cast<long>(k));
        r[k] = q_multinomial(i, j, k).shifted(e);
    }
    std::lock_guard<std::mutex> lock(sc_mutex);
    return sc_bar_cache.emplace(std::make_pair(i, j), std::move(r)).first->second;
}

QBinExpansion multiply(const QBinExpansion& a, const QBinExpansion& b) {
    if (a.basis() != b.basis()) throw basis_mismatch_error("multiplying expansions in different bases");
    QBinExpansion r(a.basis());
    for (const auto& [i, ci] : a.coeffs()) {
        for (const auto& [j, cj] : b.coeffs()) {
            RatFunc cc = ci * cj;
            auto consts = a.basis() == Basis::Standard ? struct_const(i, j) : struct_const_bar(i, j);
            for (const auto& [k, alpha] : consts) r.add_coeff(k, cc * RatFunc::from_laurent(alpha));
        }
    }
    return r;
}

QBinExpansion shift(const QBinExpansion& e, long m) {
    if (m == 0 || e.is_zero()) return e;
    QBinExpansion standard = expand(shift_xpoly(synthesize(e), m));
    if (e.basis() == Basis::Standard) return standard;
    return convert_basis(standard);
}

QBinExpansion bar(const QBinExpansion& e) {
    if (e.is_zero()) return e;
    QBinExpansion standard = expand(bar_xpoly(synthesize(e)));
    if (e.basis() == Basis::Standard) return standard;
    return convert_basis(standard);
}

QBinExpansion convert_basis(const QBinExpansion& e) {
    if (e.basis() == Basis::Bar) {
        // Bar elements are plain polynomials; expanding re-expresses them on
        // the standard basis.
        return expand(synthesize(e));
    }
    // E = sum d_k bar(qbinom(x,k))  <=>  bar(E) = sum bar(d_k) qbinom(x,k).
    QBinExpansion barred = expand(bar_xpoly(synthesize(e)));
    QBinExpansion r(Basis::Bar);
    for (const auto& [k, c] : barred.coeffs()) r.set_coeff(k, c.bar());
    return r;
}

QBinExpansion dilate(unsigned long m, const QBinExpansion& e) {
    if (m == 0) throw precondition_error("dilate requires m >= 1");
    if (e.basis() != Basis::Standard) throw basis_mismatch_error("dilate is defined on the standard basis");
    if (m == 1 || e.is_zero()) return e;
    return expand(synthesize(e).compose(dilation_poly(m)));
}

std::map<unsigned long, Rational> specialize_q1(const QBinExpansion& e) {
    if (e.basis() != Basis::Standard) throw basis_mismatch_error("specialize_q1 is defined on the standard basis");
    std::map<unsigned long, Rational> r;
    for (const auto& [k, c] : e.coeffs()) {
        Rational v = c.eval(1);
        if (v != 0) r[k] = v;
    }
    return r;
}

RatFunc qbinom_at_qint(unsigned long k, long n) {
    if (n >= 0) return RatFunc::from_laurent(q_binomial(static_cast<unsigned long>(n), static_cast<long>(k)));
    return qbinom_poly(k).eval_at_qint(n);
}

RatFunc eval_expansion(const QBinExpansion& e, long n) {
    RatFunc acc;
    for (const auto& [k, c] : e.coeffs()) {
        // bar(qbinom(x,k)) at [n]_q equals bar of qbinom(x,k) at [-n]_q.
        RatFunc v = e.basis() == Basis::Standard ? qbinom_at_qint(k, n) : qbinom_at_qint(k, -n).bar();
        acc += c * v;
    }
    return acc;
}

namespace {

bool value_in_zq(const RatFunc& v) {
    auto l = v.as_laurent();
    return l && l->has_integer_coeffs() && l->is_poly_in_q();
}

bool value_in_zqinv(const RatFunc& v) {
    auto l = v.as_laurent();
    return l && l->has_integer_coeffs() && l->is_poly_in_qinv();
}

} // namespace

Membership membership(const XPoly& p, const std::vector<long>& offsets) {
    Membership result;
    if (p.is_zero()) {
        result.in_rq = true;
        for (long m : offsets) {
            result.in_plus_offset[m] = true;
            result.in_minus_offset[m] = true;
        }
        return result;
    }
    QBinExpansion e = expand(p);
    result.in_rq = true;
    for (const auto& [k, c] : e.coeffs())
        if (!c.is_integral_laurent()) {
            result.in_rq = false;
            break;
        }
    long d = static_cast<long>(*p.degree());
    for (long m : offsets) {
        bool plus = true;
        for (long n = m; n <= m + d && plus; ++n) plus = value_in_zq(p.eval_at_qint(n));
        result.in_plus_offset[m] = plus;
        bool minus = true;
        for (long n = m - d; n <= m && minus; ++n) minus = value_in_zqinv(p.eval_at_qint(n));
        result.in_minus_offset[m] = minus;
    }
    return result;
}

} // namespace qiv
