/**
 * @file identities.hpp
 * @brief Signed permutation sums H and S over ordered rational points, their
 *        closed product forms, both subset-convolution identities, and the
 *        parity-splitting / oe-order machinery they rest on.
 *
 * Empty-set conventions H() = S() = 1 are load-bearing: they are forced by
 * the convolution identities at r = 1, whose left sides must equal 2.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scvol/index_set.hpp"
#include "scvol/rational.hpp"

namespace scvol {

/// Evaluation point for the ordered indeterminates X_1 < ... < X_r.
using RationalPoint = std::vector<Rational>;

/// Guard against accidental factorial blowup; configuration, not a hard limit.
inline constexpr std::size_t kPermutationCap = 8;
/// Cap for the 2^r subset sums of the convolution left-hand sides.
inline constexpr std::size_t kSubsetCap = 12;

/// H(X) = sum over all |X|! permutations of
///   sgn(sigma) prod_i (1 - X_i) / (1 - X_{sigma(1)} ... X_{sigma(i)}).
/// Throws if |X| exceeds kPermutationCap or a denominator vanishes
/// (the message names the offending permutation and prefix length).
Rational h_perm(std::span<const Rational> x);

/// Closed form of H: prod_{j<k} (X_j - X_k) / (1 - X_j X_k).
Rational h_closed(std::span<const Rational> x);

/// S(Y) = sum over permutations of
///   sgn(sigma) / (Y_{sigma(1)} (Y_{sigma(1)}+Y_{sigma(2)}) ... (Y_{sigma(1)}+...+Y_{sigma(r)})).
Rational s_perm(std::span<const Rational> y);

/// Closed form of S: 1/(Y_1...Y_r) prod_{j<k} (Y_k - Y_j) / (Y_k + Y_j).
Rational s_closed(std::span<const Rational> y);

/// sum_{K subseteq [r]} H(X_K) H(X_complement), via h_closed on each ordered subset.
Rational conv_h_lhs(std::span<const Rational> x);

/// Closed form of the H convolution:
///   2^{ceil(r/2)} prod_{j+r odd} (1+X_j) prod_{j even} (1-X_j)
///   prod_{j<k, j-k even} (X_j - X_k) prod_{j<k, j-k odd} 1/(1 - X_j X_k).
Rational conv_h_rhs(std::span<const Rational> x);

/// sum_{K subseteq [r]} S(Y_K) S(Y_complement).
Rational conv_s_lhs(std::span<const Rational> y);

/// Closed form of the S convolution:
///   2^r prod_{j<k, j-k even} (Y_k - Y_j) prod_{j odd} 1/Y_j
///   prod_{j<k, j-k odd} 1/(Y_k + Y_j).
Rational conv_s_rhs(std::span<const Rational> y);

struct ParitySplit {
    IndexSet even_part;  // X1 with 2*X1   = even elements of X
    IndexSet odd_part;   // X2 with 2*X2-1 = odd  elements of X
};

ParitySplit parity_split(const IndexSet& x);

/// Sign of the permutation carrying x from ascending order to increasing
/// oe-order (odd, even, odd, even, ..., each part ascending). Requires x to
/// contain exactly ceil(|x|/2) odd and floor(|x|/2) even numbers.
int oe_sign(const IndexSet& x);

}  // namespace scvol
