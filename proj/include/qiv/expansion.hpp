#pragma once

#include <map>
#include <vector>

#include "qiv/xpoly.hpp"

namespace qiv {

enum class Basis { Standard, Bar };

/// Finitely supported coefficients on the q-binomial basis (Standard:
/// sum c_k qbinom(x,k)) or on its bar image (Bar: sum c_k bar(qbinom(x,k))).
/// Invariant: no stored coefficient is zero.
class QBinExpansion {
public:
    explicit QBinExpansion(Basis basis = Basis::Standard) : basis_(basis) {}

    static QBinExpansion basis_element(unsigned long k, Basis basis = Basis::Standard) {
        QBinExpansion e(basis);
        e.set_coeff(k, RatFunc(Rational(1)));
        return e;
    }

    Basis basis() const { return basis_; }
    const std::map<unsigned long, RatFunc>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    RatFunc coeff(unsigned long k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? RatFunc() : it->second;
    }
    void set_coeff(unsigned long k, const RatFunc& c) {
        if (c.is_zero())
            coeffs_.erase(k);
        else
            coeffs_[k] = c;
    }
    void add_coeff(unsigned long k, const RatFunc& c);

    bool operator==(const QBinExpansion& o) const { return basis_ == o.basis_ && coeffs_ == o.coeffs_; }
    bool operator!=(const QBinExpansion& o) const { return !(*this == o); }

    /// Lines "k: coeff" ascending in k; "0" for the zero expansion.
    std::string str() const;

private:
    Basis basis_;
    std::map<unsigned long, RatFunc> coeffs_;
};

/// Unique coefficients with P = sum c_k qbinom(x,k), by interpolation at
/// the q-integers: c_0 = P(0), c_k = P([k]_q) - P_{k-1}([k]_q).
QBinExpansion expand(const XPoly& p);

/// Reassemble the polynomial from an expansion (either basis).
XPoly synthesize(const QBinExpansion& e);

/// Structure constants of qbinom(x,i) qbinom(x,j) = sum_k alpha_{i,j,k} qbinom(x,k):
/// alpha_{i,j,k} = q^{(k-i)(k-j)} [k]!/([k-i]![k-j]![i+j-k]!) for
/// k in [max(i,j), i+j].  Memoized.
std::map<unsigned long, LaurentPoly> struct_const(unsigned long i, unsigned long j);

/// Bar-basis structure constants, with exponent q^{i(i-k)+j(j-k)}.
std::map<unsigned long, LaurentPoly> struct_const_bar(unsigned long i, unsigned long j);

/// Bilinear product in a common basis; throws BasisMismatch.
QBinExpansion multiply(const QBinExpansion& a, const QBinExpansion& b);

/// S^m with S(x) = qx+1: eval(shift(E,m), n) = eval(E, n+m).
QBinExpansion shift(const QBinExpansion& e, long m);

/// The bar involution q -> q^-1, x -> -qx, re-expanded in the same basis.
QBinExpansion bar(const QBinExpansion& e);

/// Exact rewrite Standard <-> Bar (to the opposite basis).
QBinExpansion convert_basis(const QBinExpansion& e);

/// Dilation: eval(dilate(m,E), n) = eval(E, m*n).  Standard basis only.
QBinExpansion dilate(unsigned long m, const QBinExpansion& e);

/// Substitute q := 1 in every coefficient, giving the classical expansion in
/// binom(x,k).  Throws PoleAtOne when a coefficient has a pole at q = 1.
std::map<unsigned long, Rational> specialize_q1(const QBinExpansion& e);

/// Exact value of qbinom(x,k) at x := [n]_q (equals qbinom(n,k)_q for n >= 0).
RatFunc qbinom_at_qint(unsigned long k, long n);

/// Value of an expansion at x := [n]_q.
RatFunc eval_expansion(const QBinExpansion& e, long n);

/// Ring-membership classification of P.
struct Membership {
    bool in_rq = false;                // all expansion coefficients in Z[q,q^-1]
    std::map<long, bool> in_plus_offset;   // P in R_q^{+,m}
    std::map<long, bool> in_minus_offset;  // P in R_q^{-,m}
};

/// in_rq from the expansion coefficients; the offset families decided by
/// finite evaluation at deg(P)+1 consecutive q-integers starting (ending)
/// at each requested offset.
Membership membership(const XPoly& p, const std::vector<long>& offsets);

} // namespace qiv
