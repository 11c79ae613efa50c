#include "qiv/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace qiv {

unsigned long euler_totient(unsigned long d) {
    unsigned long result = d;
    unsigned long n = d;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::mutex phi_mutex;
std::map<unsigned long, QPoly> phi_cache;

QPoly compute_phi(unsigned long d);

QPoly phi_cached(unsigned long d) {
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        auto it = phi_cache.find(d);
        if (it != phi_cache.end()) return it->second;
    }
    QPoly value = compute_phi(d);
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_cache.emplace(d, std::move(value)).first->second;
}

QPoly compute_phi(unsigned long d) {
    // q^d - 1 divided by the cyclotomics of all proper divisors.
    std::vector<Rational> c(d + 1, Rational(0));
    c[0] = -1;
    c[d] = 1;
    QPoly result{std::move(c)};
    for (unsigned long e = 1; e < d; ++e)
        if (d % e == 0) result = QPoly::exact_divide(result, phi_cached(e));
    return result;
}

} // namespace

CyclotomicModulus cyclotomic(unsigned long d) {
    if (d == 0) throw precondition_error("cyclotomic index must be positive");
    return CyclotomicModulus{d, phi_cached(d)};
}

LaurentPoly reduce_mod_cyclotomic(const LaurentPoly& f, const CyclotomicModulus& m) {
    long d = static_cast<long>(m.d);
    QPoly folded;
    {
        // Fold exponents into [0, d) using q^d == 1 mod Phi_d.
        std::vector<Rational> c(static_cast<size_t>(d), Rational(0));
        for (const auto& [e, v] : f.terms()) {
            long r = e % d;
            if (r < 0) r += d;
            c[static_cast<size_t>(r)] += v;
        }
        folded = QPoly{std::move(c)};
    }
    return QPoly::divmod(folded, m.phi).second.to_laurent();
}

} // namespace qiv
