#include "qiv/qnum.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qiv {

LaurentPoly q_int(long n) {
    LaurentPoly r;
    if (n > 0)
        for (long e = 0; e < n; ++e) r.set_coeff(e, 1);
    else
        for (long e = n; e <= -1; ++e) r.set_coeff(e, -1);
    return r;
}

namespace {

std::mutex qfact_mutex;
std::vector<LaurentPoly> qfact_cache;  // index n

std::mutex qbinom_mutex;
std::map<std::pair<unsigned long, unsigned long>, LaurentPoly> qbinom_cache;

} // namespace

LaurentPoly q_factorial(unsigned long n) {
    std::lock_guard<std::mutex> lock(qfact_mutex);
    if (qfact_cache.empty()) qfact_cache.push_back(LaurentPoly(Rational(1)));
    while (qfact_cache.size() <= n)
        qfact_cache.push_back(qfact_cache.back() * q_int(static_cast<long>(qfact_cache.size())));
    return qfact_cache[n];
}

LaurentPoly q_binomial(unsigned long n, long m) {
    if (m < 0 || static_cast<unsigned long>(m) > n) return LaurentPoly();
    unsigned long k = static_cast<unsigned long>(m);
    if (k == 0 || k == n) return LaurentPoly(Rational(1));
    std::lock_guard<std::mutex> lock(qbinom_mutex);
    auto it = qbinom_cache.find({n, k});
    if (it != qbinom_cache.end()) return it->second;
    // Fill rows bottom-up: qbinom(r,c) = q^c qbinom(r-1,c) + qbinom(r-1,c-1).
    for (unsigned long r = 2; r <= n; ++r) {
        unsigned long cmax = std::min(k, r - 1);
        for (unsigned long c = 1; c <= cmax; ++c) {
            if (qbinom_cache.count({r, c})) continue;
            auto prev = [&](unsigned long cc) -> LaurentPoly {
                if (cc == 0 || cc == r - 1) return LaurentPoly(Rational(1));
                if (cc > r - 1) return LaurentPoly();
                return qbinom_cache.at({r - 1, cc});
            };
            qbinom_cache[{r, c}] = prev(c).shifted(static_cast<long>(c)) + prev(c - 1);
        }
    }
    return qbinom_cache.at({n, k});
}

std::pair<QLucasDecomposition, LaurentPoly> q_lucas(unsigned long n, unsigned long m, unsigned long d) {
    if (d == 0) throw precondition_error("q_lucas requires d >= 1");
    QLucasDecomposition dec{n / d, n % d, m / d, m % d, d};
    CyclotomicModulus mod = cyclotomic(d);
    Integer c = binomial(Integer(dec.n_prime), dec.m_prime);
    LaurentPoly value = q_binomial(dec.n0, static_cast<long>(dec.m0)).scaled(Rational(c));
    return {dec, reduce_mod_cyclotomic(value, mod)};
}

unsigned long lucas_binom_mod_p(unsigned long n, unsigned long m, unsigned long p) {
    if (!is_prime(p)) throw not_prime_error("lucas_binom_mod_p requires a prime modulus");
    unsigned long acc = 1;
    while (n > 0 || m > 0) {
        unsigned long ni = n % p, mi = m % p;
        if (mi > ni) return 0;
        acc = (acc * static_cast<unsigned long>(binomial(Integer(ni), mi) % p)) % p;
        n /= p;
        m /= p;
    }
    return acc;
}

} // namespace qiv
