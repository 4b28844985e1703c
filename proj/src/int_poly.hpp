// Internal integer-polynomial helpers backing the exact stability oracle.
// Polynomials are coefficient vectors in ascending powers, normalized so the
// leading (last) coefficient is nonzero; the zero polynomial is empty.
#pragma once

#include <span>
#include <vector>

#include "scvol/rational.hpp"

namespace scvol::detail {

using IntPoly = std::vector<Int>;

void normalize(IntPoly& p);
int degree(const IntPoly& p);  // -1 for the zero polynomial

/// Clears denominators: multiplies by the positive lcm of all denominators.
IntPoly clear_denominators(std::span<const Rational> ascending);

IntPoly derivative(const IntPoly& p);

/// Positive gcd of the coefficients (0 for the zero polynomial).
Int content(const IntPoly& p);
void make_primitive(IntPoly& p);

/// -rem(a, b) scaled by some positive constant (pseudo-remainder with the
/// accumulated leading-coefficient power sign-corrected). Requires b != 0.
IntPoly prem_neg(const IntPoly& a, const IntPoly& b);

/// Primitive gcd via the Euclidean pseudo-remainder sequence.
IntPoly gcd_poly(IntPoly a, IntPoly b);

/// Exact quotient a / b; requires that b divides a over the rationals and
/// that the quotient has integer coefficients (b primitive suffices).
IntPoly exact_div(IntPoly a, const IntPoly& b);

/// Number of distinct real roots of the squarefree primitive polynomial f,
/// by the sign-change count of its Sturm chain at -inf and +inf.
int sturm_distinct_real_roots(const IntPoly& f);

}  // namespace scvol::detail
