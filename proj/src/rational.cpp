#include "qiv/rational.hpp"

namespace qiv {

Integer factorial(unsigned long n) {
    Integer acc = 1;
    for (unsigned long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Integer binomial(const Integer& n, unsigned long m) {
    Integer num = 1;
    for (unsigned long i = 0; i < m; ++i) num *= n - i;
    return num / factorial(m);
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw parse_error("bad rational: " + text);
    }
}

} // namespace qiv
