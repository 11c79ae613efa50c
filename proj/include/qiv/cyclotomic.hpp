#pragma once

#include "qiv/laurent.hpp"
#include "qiv/qpoly.hpp"

namespace qiv {

/// The d-th cyclotomic polynomial Phi_d together with its index, acting as a
/// reduction modulus for Z[q]/Phi_d(q).
struct CyclotomicModulus {
    unsigned long d;
    QPoly phi;

    LaurentPoly phi_laurent() const { return phi.to_laurent(); }
    long degree() const { return phi.degree(); }
};

/// Phi_d computed by exact division: (q^d - 1) / prod_{e|d, e<d} Phi_e.
/// Memoized per process; safe for concurrent use.
CyclotomicModulus cyclotomic(unsigned long d);

unsigned long euler_totient(unsigned long d);

/// Canonical representative of f in Q[q]/Phi_d(q), degree < deg Phi_d.
/// Negative exponents are first cleared using q^-1 == q^{d-1} (valid since
/// q^d == 1 mod Phi_d).
LaurentPoly reduce_mod_cyclotomic(const LaurentPoly& f, const CyclotomicModulus& m);

} // namespace qiv
