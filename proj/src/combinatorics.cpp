#include "scvol/combinatorics.hpp"

#include <stdexcept>

namespace scvol {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int double_factorial(unsigned long n) {
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(long n, long k) {
    if (k < 0) return 0;
    // Falling-factorial product; each intermediate division is exact.
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= Int(n - i + 1);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

Int trinomial(unsigned long n, unsigned long a, unsigned long b, unsigned long c) {
    if (a + b + c != n) throw std::domain_error("trinomial: parts do not sum to n");
    return binomial(static_cast<long>(n), static_cast<long>(a)) *
           binomial(static_cast<long>(n - a), static_cast<long>(b));
}

Rational legendre_eval(unsigned d, const Rational& x) {
    const Rational half_shift = (x - Rational(1)) / Rational(2);
    Rational sum = 0;
    Rational power = 1;  // ((x-1)/2)^j
    for (unsigned j = 0; j <= d; ++j) {
        Int coeff = binomial(static_cast<long>(d + j), 2l * j) *
                    binomial(2l * j, static_cast<long>(j));
        sum += Rational(std::move(coeff)) * power;
        power *= half_shift;
    }
    return sum;
}

}  // namespace scvol
