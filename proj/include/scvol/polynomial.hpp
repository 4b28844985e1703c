#pragma once

#include <vector>

#include "scvol/rational.hpp"

namespace scvol {

/// Monic real polynomial X^d + a_1 X^{d-1} + ... + a_d, stored as the
/// coefficient vector (a_1, ..., a_d); the leading 1 is implicit.
class RealPolynomial {
public:
    explicit RealPolynomial(std::vector<Rational> coeffs);  // degree = size, must be >= 1

    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficients in ascending powers c_0..c_d, with c_d = 1.
    std::vector<Rational> ascending() const;

private:
    std::vector<Rational> coeffs_;
};

}  // namespace scvol
