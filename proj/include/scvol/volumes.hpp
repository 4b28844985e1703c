/**
 * @file volumes.hpp
 * @brief Exact volumes of the signature-partitioned Schur-Cohn region and
 *        the integer ratios v_d^(s)/v_d^(0), each computable through several
 *        independent formula paths so the paths can be compared bit-exactly.
 *
 * Throughout, d is the polynomial degree and s the number of pairs of
 * nonreal roots; valid signatures satisfy 0 <= 2s <= d.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scvol/rational.hpp"

namespace scvol {

struct Signature {
    int d = 1;
    int s = 0;
};

/// Throws unless d >= 1, s >= 0 and 2s <= d.
void validate_signature(int d, int s);

enum class RatioMethod { Trinomial, Hilbert, BinomDet, EvenAlt, DetMix };
enum class ComplexMethod { Closed, Determinant };
enum class MixedVariant { Rows, Cols };
enum class TotalMethod { Closed, Det };

std::string to_string(RatioMethod m);
std::optional<RatioMethod> ratio_method_from_string(std::string_view s);

/// Volume of the full region: 2^d prod_{j=1}^{floor(d/2)} (1 + 1/(2j))^{2j-d}.
Rational v_full(int d);

/// Volume of the all-roots-real cell:
///   2^{d(d+1)/2} prod_{j=1}^{d} (j-1)!^2 / (2j-1)!.
Rational v_real(int d);

/// Same value through the alternant determinants (even and odd variants).
Rational v_real_det(int d);

/// Volume of the totally complex cell v_{2s}^(s), by the closed product or
/// by 2^{3s} times the full alternant minor; the two must agree.
Rational v_totally_complex(int s, ComplexMethod method);

/// General signature volume as a sum of structured determinants over the
/// size-s subsets J. For even d both the row- and column-marked variants
/// exist; for odd d only Rows, with s <= (d-1)/2.
Rational v_mixed(int d, int s, MixedVariant variant);

/// The integer ratio v_d^(s) / v_d^(0) by the selected formula path.
/// All paths agree; EvenAlt requires even d.
Rational ratio(int d, int s, RatioMethod method);

/// (P_d(3) - 2d - 1)/4; equals ratio(d, 1, *) for d >= 2 and 0 for d = 1.
Rational ratio_legendre_s1(int d);

/// v_d / v_d^(0), by the closed binomial product or by the full determinant.
Rational total_ratio(int d, TotalMethod method);

/// v_d^(s) = v_real(d) * ratio(d, s, method).
Rational volume(int d, int s, RatioMethod method = RatioMethod::BinomDet);

struct VolumeRecord {
    Signature sig;
    Rational value;
    RatioMethod method = RatioMethod::BinomDet;
};

struct VolumeTable {
    std::vector<VolumeRecord> records;  // ordered by (d, s)
    std::vector<Rational> row_sums;     // index d-1: sum_s v_d^(s)
    std::vector<Rational> full_volumes; // index d-1: v_full(d)
};

/// All cells for 1 <= d <= d_max. Cells may be computed concurrently
/// (threads = 0 picks the runtime default, 1 forces serial); the output
/// order and values are independent of the thread count.
VolumeTable volume_table(int d_max, int threads = 0);

}  // namespace scvol
