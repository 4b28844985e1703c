/**
 * @file alternant.hpp
 * @brief Closed-form Cauchy-type determinants and the structured minors
 *        built from them.
 */
#pragma once

#include <span>

#include "scvol/index_set.hpp"
#include "scvol/rational.hpp"

namespace scvol {

/// det(1/(X_j + Y_k))_{1<=j,k<=s} evaluated as
///   prod_{j<k} (X_j - X_k)(Y_j - Y_k) / prod_{j,k} (X_j + Y_k).
/// Requires |X| = |Y|; throws if some X_j + Y_k = 0.
Rational cauchy_alternant(std::span<const Rational> xs, std::span<const Rational> ys);

/// Determinant of the n x n matrix whose rows 1..n-1 are 1/(X_j + Y_k) and
/// whose last row is all ones:
///   prod_{j<k<=n-1} (X_k - X_j) prod_{j<k<=n} (Y_k - Y_j)
///     / prod_{j<=n-1, k<=n} (X_j + Y_k).
/// Requires |X| = |Y| - 1; throws if some X_j + Y_k = 0.
Rational cauchy_alternant_odd(std::span<const Rational> xs, std::span<const Rational> ys);

/// det(1/((2j)^2 - (2k-1)^2))_{j in rows, k in cols} with rows, cols contained
/// in {1..s} and |rows| = |cols|. rows = cols = {1..s} gives the full minor.
Rational ds_minor(int s, const IndexSet& rows, const IndexSet& cols);

/// det(1/(j + k + shift))_{j,k in K} with shift 0 or -1; 1 for empty K.
Rational hilbert_minor(const IndexSet& k, int shift = 0);

}  // namespace scvol
