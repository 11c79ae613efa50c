#pragma once

#include <map>

#include "qiv/cyclotomic.hpp"
#include "qiv/expansion.hpp"

namespace qiv {

/// Element of R tensor F_p on the classical binomial basis: finitely
/// supported residues, no stored zeros.
struct ClassicalExpansionModP {
    unsigned long p;
    std::map<unsigned long, unsigned long> coeffs;

    bool operator==(const ClassicalExpansionModP& o) const { return p == o.p && coeffs == o.coeffs; }
    std::string str() const;
};

/// Element of R_q/Phi_d(q) on the q-binomial basis; every coefficient is the
/// canonical reduce_mod_cyclotomic representative.
struct ExpansionModPhiD {
    unsigned long d;
    std::map<unsigned long, LaurentPoly> coeffs;

    bool operator==(const ExpansionModPhiD& o) const { return d == o.d && coeffs == o.coeffs; }
    std::string str() const;
};

/// Classical integer expansion on the binomial basis.
using ClassicalExpansion = std::map<unsigned long, Integer>;

ClassicalExpansionModP reduce_classical_mod_p(const ClassicalExpansion& e, unsigned long p);
ClassicalExpansionModP reduce_classical_mod_p(const std::map<unsigned long, Rational>& e, unsigned long p);

/// Reduce a standard-basis expansion with Z[q,q^-1] coefficients mod Phi_d.
ExpansionModPhiD reduce_expansion_mod_phi(const QBinExpansion& e, unsigned long d);

/// Integer structure constants of Theorem 3.1:
/// binom(x,i) binom(x,j) = sum_k k!/((k-i)!(k-j)!(i+j-k)!) binom(x,k).
std::map<unsigned long, Integer> classical_struct_const(unsigned long i, unsigned long j);

ClassicalExpansion multiply_classical(const ClassicalExpansion& a, const ClassicalExpansion& b);
ClassicalExpansionModP multiply_mod_p(const ClassicalExpansionModP& a, const ClassicalExpansionModP& b);
ExpansionModPhiD multiply_mod_phi(const ExpansionModPhiD& a, const ExpansionModPhiD& b);

/// Frobenius Psi_p: binom(x,k) -> binom(x,pk), F_p-linearly.
ClassicalExpansionModP frob_p(const ClassicalExpansionModP& e);

/// One-sided inverse: binom(x,k) -> binom(x,k/p) when p | k, else dropped.
ClassicalExpansionModP frob_p_inverse(const ClassicalExpansionModP& e);

/// Quantum Frobenius Psi_d: binom(x,k) -> qbinom(x,dk) in R_q/Phi_d(q).
ExpansionModPhiD qfrob_d(const ClassicalExpansion& e, unsigned long d);

/// One-sided inverse: qbinom(x,k) -> binom(x,k/d) when d | k, else dropped;
/// coefficients stay in Z[q,q^-1]/Phi_d.
ExpansionModPhiD qfrob_d_inverse(const ExpansionModPhiD& e);

} // namespace qiv
