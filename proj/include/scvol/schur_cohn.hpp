#pragma once

#include "scvol/polynomial.hpp"

namespace scvol {

/// True iff every root of p has modulus < 1, decided exactly by the
/// degree-lowering reduction q(x) = (c_d p(x) - c_0 p*(x)) / x, where
/// p*(x) = x^d p(1/x): p is contractive iff |c_0| < |c_d| and q is.
/// Points with |c_0| = |c_d| at some step (roots on the unit circle among
/// them) classify as non-contractive.
bool is_contractive(const RealPolynomial& p);

}  // namespace scvol
