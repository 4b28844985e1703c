/**
 * @file mc.hpp
 * @brief Seeded Monte-Carlo estimation of the per-signature volumes, with an
 *        exact classifier: each sampled coefficient vector is converted to
 *        exact dyadic rationals, so contractivity and signature counting
 *        involve no floating-point tolerance at all.
 *
 * Sampling box: coefficient i is uniform in [-C(d,i), +C(d,i)], which
 * contains the whole region since |a_i| <= C(d,i) whenever all roots lie in
 * the closed unit disk. The hit rate therefore decays quickly with d;
 * estimates are practical for d <= 6.
 *
 * Determinism: the sample range is split into fixed 4096-sample chunks and
 * chunk k draws from SplitMix64 seeded with mix64(seed, k); per-signature
 * tallies merge by addition. Reports are bit-identical for equal
 * (d, samples, seed) regardless of thread count.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "scvol/rational.hpp"

namespace scvol {

struct McPerSignature {
    int s = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;   // box_volume * hits / samples
    double std_error = 0.0;  // box_volume * sqrt(p(1-p)/samples)
};

struct McReport {
    int d = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    Rational box_volume;
    std::vector<McPerSignature> per_s;  // s = 0 .. floor(d/2)
    std::uint64_t degenerate = 0;       // repeated-root draws, excluded from hits

    friend bool operator==(const McReport& a, const McReport& b);
};

/// OpenMP-parallel estimator; threads = 0 uses the runtime default.
McReport mc_estimate(int d, std::uint64_t samples, std::uint64_t seed, int threads = 0);

/// Serial reference implementation; must produce bit-identical reports.
McReport mc_estimate_serial(int d, std::uint64_t samples, std::uint64_t seed);

}  // namespace scvol
