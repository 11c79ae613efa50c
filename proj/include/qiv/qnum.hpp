#pragma once

#include "qiv/cyclotomic.hpp"
#include "qiv/laurent.hpp"

namespace qiv {

/// q-integer [n]_q for any n in Z: 1+q+...+q^{n-1} for n > 0, zero for
/// n = 0, and -q^-1 - q^-2 - ... - q^n for n < 0.
LaurentPoly q_int(long n);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.  Memoized.
LaurentPoly q_factorial(unsigned long n);

/// Gaussian binomial coefficient as a polynomial in q; zero when m < 0 or
/// m > n.  Computed by the q-Pascal recurrence with memoization, so the
/// coefficients are nonnegative integers by construction.
LaurentPoly q_binomial(unsigned long n, long m);

struct QLucasDecomposition {
    unsigned long n_prime;
    unsigned long n0;  // in [0, d-1]
    unsigned long m_prime;
    unsigned long m0;  // in [0, d-1]
    unsigned long d;
};

/// q-Lucas: qbinom(n,m) == binom(n',m') * qbinom(n0,m0) mod Phi_d, where
/// n = d n' + n0 and m = d m' + m0.  Returns the decomposition and the
/// reduced right-hand side.
std::pair<QLucasDecomposition, LaurentPoly> q_lucas(unsigned long n, unsigned long m, unsigned long d);

/// binom(n,m) mod p via the base-p digit product of Lucas' theorem.
unsigned long lucas_binom_mod_p(unsigned long n, unsigned long m, unsigned long p);

} // namespace qiv
