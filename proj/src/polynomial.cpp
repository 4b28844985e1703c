#include "scvol/polynomial.hpp"

#include <stdexcept>

namespace scvol {

RealPolynomial::RealPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("RealPolynomial: degree must be at least 1");
}

std::vector<Rational> RealPolynomial::ascending() const {
    std::vector<Rational> c(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[coeffs_.size() - 1 - i];
    c.back() = Rational(1);
    return c;
}

}  // namespace scvol
