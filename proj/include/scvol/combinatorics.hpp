/**
 * @file combinatorics.hpp
 * @brief Exact integer combinatorics: factorials, binomials, trinomials,
 *        and Legendre polynomial evaluation over rationals.
 */
#pragma once

#include "scvol/rational.hpp"

namespace scvol {

Int factorial(unsigned long n);

/// n!! = n(n-2)(n-4)..., with 0!! = 1!! = 1.
Int double_factorial(unsigned long n);

/// Total on all integers: 0 for k < 0, the generalized falling-factorial
/// value otherwise (in particular 0 when n >= 0 and k > n).
Int binomial(long n, long k);

/// n!/(a! b! c!); requires a + b + c = n.
Int trinomial(unsigned long n, unsigned long a, unsigned long b, unsigned long c);

/// P_d(x) via the binomial sum
///   P_d(x) = sum_{j=0}^{d} C(d+j, 2j) C(2j, j) ((x-1)/2)^j.
Rational legendre_eval(unsigned d, const Rational& x);

}  // namespace scvol
