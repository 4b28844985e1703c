#pragma once

#include <optional>

#include "scvol/polynomial.hpp"

namespace scvol {

/// Number of distinct real roots of p over all of R, via the Sturm chain of
/// the squarefree part p / gcd(p, p').
int real_root_count(const RealPolynomial& p);

struct PolySignature {
    int real_roots;     // counted with multiplicity (inputs with repeated roots are rejected)
    int complex_pairs;  // (d - real_roots) / 2
};

/// Signature of a squarefree p; nullopt flags a repeated root (gcd(p, p')
/// nonconstant), which callers discard or report as degenerate.
std::optional<PolySignature> signature_of(const RealPolynomial& p);

}  // namespace scvol
