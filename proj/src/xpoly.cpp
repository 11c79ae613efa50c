#include "qiv/xpoly.hpp"

#include <mutex>
#include <sstream>

namespace qiv {

void XPoly::trim() {
    while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
    if (num_.empty()) den_ = QPoly(Rational(1));
}

XPoly XPoly::constant(const RatFunc& c) {
    XPoly r;
    if (c.is_zero()) return r;
    r.num_.push_back(c.num().to_laurent());
    r.den_ = c.den();
    return r;
}

XPoly XPoly::constant(const LaurentPoly& c) {
    XPoly r;
    if (c.is_zero()) return r;
    r.num_.push_back(c);
    return r;
}

XPoly XPoly::x() {
    XPoly r;
    r.num_.push_back(LaurentPoly());
    r.num_.push_back(LaurentPoly(Rational(1)));
    return r;
}

XPoly XPoly::from_parts(std::vector<LaurentPoly> nums, QPoly den) {
    if (den.is_zero()) throw zero_denominator_error("XPoly with zero denominator");
    XPoly r;
    r.num_ = std::move(nums);
    if (den.leading() != 1) {
        Rational lc = den.leading();
        den = den.scaled(Rational(1) / lc);
        for (auto& n : r.num_) n = n.scaled(Rational(1) / lc);
    }
    r.den_ = std::move(den);
    r.trim();
    return r;
}

XPoly XPoly::from_coeffs(const std::vector<RatFunc>& coeffs) {
    XPoly r;
    XPoly xp = x();
    XPoly power = constant(LaurentPoly(Rational(1)));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) r += power.scaled(coeffs[i]);
        if (i + 1 < coeffs.size()) power *= xp;
    }
    return r;
}

RatFunc XPoly::coeff(size_t i) const {
    if (i >= num_.size()) return RatFunc();
    return RatFunc::from_laurent(num_[i]) / RatFunc(den_, QPoly(Rational(1)));
}

std::vector<RatFunc> XPoly::coeffs() const {
    std::vector<RatFunc> r;
    r.reserve(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) r.push_back(coeff(i));
    return r;
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& n : r.num_) n = -n;
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    XPoly r;
    if (a.den_ == b.den_) {
        r.den_ = a.den_;
        r.num_.resize(std::max(a.num_.size(), b.num_.size()));
        for (size_t i = 0; i < a.num_.size(); ++i) r.num_[i] += a.num_[i];
        for (size_t i = 0; i < b.num_.size(); ++i) r.num_[i] += b.num_[i];
    } else {
        QPoly g = QPoly::gcd(a.den_, b.den_);
        QPoly fa = QPoly::exact_divide(b.den_, g);  // scale for a's numerators
        QPoly fb = QPoly::exact_divide(a.den_, g);  // scale for b's numerators
        LaurentPoly la = fa.to_laurent(), lb = fb.to_laurent();
        r.den_ = a.den_ * fa;
        r.num_.resize(std::max(a.num_.size(), b.num_.size()));
        for (size_t i = 0; i < a.num_.size(); ++i) r.num_[i] += a.num_[i] * la;
        for (size_t i = 0; i < b.num_.size(); ++i) r.num_[i] += b.num_[i] * lb;
    }
    r.trim();
    return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.num_.resize(a.num_.size() + b.num_.size() - 1);
    for (size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i].is_zero()) continue;
        for (size_t j = 0; j < b.num_.size(); ++j)
            if (!b.num_[j].is_zero()) r.num_[i + j] += a.num_[i] * b.num_[j];
    }
    r.den_ = a.den_ * b.den_;
    r.trim();
    return r;
}

XPoly XPoly::scaled(const RatFunc& c) const {
    XPoly r;
    if (c.is_zero() || is_zero()) return r;
    LaurentPoly cl = c.num().to_laurent();
    r.num_.reserve(num_.size());
    for (const auto& n : num_) r.num_.push_back(n * cl);
    r.den_ = den_ * c.den();
    r.trim();
    return r;
}

XPoly XPoly::scaled(const LaurentPoly& c) const {
    XPoly r;
    if (c.is_zero() || is_zero()) return r;
    r.num_.reserve(num_.size());
    for (const auto& n : num_) r.num_.push_back(n * c);
    r.den_ = den_;
    r.trim();
    return r;
}

XPoly XPoly::compose(const XPoly& inner) const {
    if (is_zero()) return XPoly();
    // Horner on the numerators, then fold in our denominator.
    XPoly acc = XPoly::constant(num_.back());
    for (size_t i = num_.size() - 1; i-- > 0;) acc = acc * inner + XPoly::constant(num_[i]);
    acc.den_ = acc.den_ * den_;
    acc.trim();
    return acc;
}

RatFunc XPoly::eval_at_qint(long n) const {
    if (is_zero()) return RatFunc();
    LaurentPoly point = q_int(n);
    LaurentPoly acc = num_.back();
    for (size_t i = num_.size() - 1; i-- > 0;) acc = acc * point + num_[i];
    return RatFunc::from_laurent(acc) / RatFunc(den_, QPoly(Rational(1)));
}

RatFunc XPoly::eval(const RatFunc& point) const {
    if (is_zero()) return RatFunc();
    RatFunc acc = RatFunc::from_laurent(num_.back());
    for (size_t i = num_.size() - 1; i-- > 0;) acc = acc * point + RatFunc::from_laurent(num_[i]);
    return acc / RatFunc(den_, QPoly(Rational(1)));
}

bool XPoly::operator==(const XPoly& o) const {
    if (num_.size() != o.num_.size()) return false;
    if (den_ == o.den_) return num_ == o.num_;
    LaurentPoly da = den_.to_laurent(), db = o.den_.to_laurent();
    for (size_t i = 0; i < num_.size(); ++i)
        if (num_[i] * db != o.num_[i] * da) return false;
    return true;
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        RatFunc c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        if (i == 1)
            out << "*x";
        else if (i > 1)
            out << "*x^" << i;
    }
    return out.str();
}

namespace {

std::mutex qbp_mutex;
// numerator_products[k] = x (x - [1]_q) ... (x - [k-1]_q) as Laurent coefficient lists
std::vector<std::vector<LaurentPoly>> qbp_numerators;

} // namespace

XPoly qbinom_poly(unsigned long k) {
    if (k == 0) return XPoly::constant(LaurentPoly(Rational(1)));
    std::vector<LaurentPoly> nums;
    {
        std::lock_guard<std::mutex> lock(qbp_mutex);
        if (qbp_numerators.empty()) {
            qbp_numerators.push_back({LaurentPoly(Rational(1))});          // empty product
            qbp_numerators.push_back({LaurentPoly(), LaurentPoly(Rational(1))});  // x
        }
        while (qbp_numerators.size() <= k) {
            unsigned long j = qbp_numerators.size();  // building product of j factors
            LaurentPoly root = q_int(static_cast<long>(j) - 1);
            const auto& prev = qbp_numerators.back();
            std::vector<LaurentPoly> next(prev.size() + 1);
            for (size_t i = 0; i < prev.size(); ++i) {
                next[i + 1] += prev[i];
                next[i] -= prev[i] * root;
            }
            qbp_numerators.push_back(std::move(next));
        }
        nums = qbp_numerators[k];
    }
    LaurentPoly den = q_factorial(k).shifted(static_cast<long>(k * (k - 1) / 2));
    return XPoly::from_parts(std::move(nums), QPoly::from_laurent(den));
}

XPoly bar_xpoly(const XPoly& p) {
    auto cs = p.coeffs();
    XPoly result;
    XPoly minus_qx = XPoly::x().scaled(LaurentPoly(Rational(-1), 1));
    XPoly power = XPoly::constant(LaurentPoly(Rational(1)));
    for (size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_zero()) result += power.scaled(cs[i].bar());
        if (i + 1 < cs.size()) power *= minus_qx;
    }
    return result;
}

XPoly shift_xpoly(const XPoly& p, long m) {
    if (m == 0) return p;
    XPoly inner = XPoly::x().scaled(LaurentPoly(Rational(1), m)) + XPoly::constant(q_int(m));
    return p.compose(inner);
}

XPoly dilation_poly(unsigned long m) {
    if (m == 0) throw precondition_error("dilation index must be positive");
    // D_m(x) = sum_{i=1}^{m} binom(m,i) (q-1)^{i-1} x^i
    LaurentPoly qm1 = LaurentPoly(Rational(1), 1) - LaurentPoly(Rational(1));
    std::vector<LaurentPoly> nums(m + 1);
    LaurentPoly pw(Rational(1));
    for (unsigned long i = 1; i <= m; ++i) {
        nums[i] = pw.scaled(Rational(binomial(Integer(m), i)));
        pw *= qm1;
    }
    return XPoly::from_parts(std::move(nums), QPoly(Rational(1)));
}

} // namespace qiv
