/**
 * @file matrix.hpp
 * @brief Dense square matrices of rationals and an exact determinant.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "scvol/rational.hpp"

namespace scvol {

class RationalMatrix {
public:
    RationalMatrix() : n_(0) {}
    explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t order() const { return n_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

/// Exact determinant. Clears a common denominator per row, runs fraction-free
/// (Bareiss) elimination over integers, and restores the denominator product.
/// The 0x0 determinant is 1.
Rational det(const RationalMatrix& m);

}  // namespace scvol
