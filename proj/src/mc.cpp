#include "scvol/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scvol/combinatorics.hpp"
#include "scvol/polynomial.hpp"
#include "scvol/rng.hpp"
#include "scvol/schur_cohn.hpp"
#include "scvol/sturm.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scvol {

namespace {

constexpr std::uint64_t kChunkSamples = 4096;

struct Tally {
    std::vector<std::uint64_t> hits;
    std::uint64_t degenerate = 0;

    explicit Tally(std::size_t cells) : hits(cells, 0) {}

    void merge(const Tally& o) {
        for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += o.hits[i];
        degenerate += o.degenerate;
    }
};

Tally run_chunk(int d, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count,
                const std::vector<double>& half_widths, std::size_t cells) {
    Tally tally(cells);
    SplitMix64 rng(mix64(seed, chunk));
    std::vector<Rational> coeffs(static_cast<std::size_t>(d));
    for (std::uint64_t n = 0; n < count; ++n) {
        for (int i = 0; i < d; ++i) {
            double u = rng.next_unit();
            coeffs[static_cast<std::size_t>(i)] =
                Rational::from_double((2.0 * u - 1.0) * half_widths[static_cast<std::size_t>(i)]);
        }
        RealPolynomial p(coeffs);
        if (!is_contractive(p)) continue;
        auto sig = signature_of(p);
        if (!sig) {
            ++tally.degenerate;
            continue;
        }
        ++tally.hits[static_cast<std::size_t>(sig->complex_pairs)];
    }
    return tally;
}

McReport assemble(int d, std::uint64_t samples, std::uint64_t seed, const Tally& tally) {
    McReport report;
    report.d = d;
    report.samples = samples;
    report.seed = seed;
    report.degenerate = tally.degenerate;
    report.box_volume = 1;
    for (int i = 1; i <= d; ++i) report.box_volume *= Rational(2 * binomial(d, i));
    const double box = report.box_volume.to_double();
    const double n = static_cast<double>(samples);
    report.per_s.resize(tally.hits.size());
    for (std::size_t s = 0; s < tally.hits.size(); ++s) {
        McPerSignature& cell = report.per_s[s];
        cell.s = static_cast<int>(s);
        cell.hits = tally.hits[s];
        const double p = static_cast<double>(cell.hits) / n;
        cell.estimate = box * p;
        cell.std_error = box * std::sqrt(p * (1.0 - p) / n);
    }
    return report;
}

void check_args(int d, std::uint64_t samples) {
    if (d < 1) throw std::domain_error("mc_estimate: degree d must be >= 1");
    if (samples < 1) throw std::domain_error("mc_estimate: need at least one sample");
}

std::vector<double> box_half_widths(int d) {
    std::vector<double> w(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        w[static_cast<std::size_t>(i - 1)] = Rational(binomial(d, i)).to_double();
    return w;
}

}  // namespace

bool operator==(const McReport& a, const McReport& b) {
    if (a.d != b.d || a.samples != b.samples || a.seed != b.seed ||
        a.box_volume != b.box_volume || a.degenerate != b.degenerate ||
        a.per_s.size() != b.per_s.size())
        return false;
    for (std::size_t i = 0; i < a.per_s.size(); ++i) {
        const McPerSignature& x = a.per_s[i];
        const McPerSignature& y = b.per_s[i];
        if (x.s != y.s || x.hits != y.hits || x.estimate != y.estimate ||
            x.std_error != y.std_error)
            return false;
    }
    return true;
}

McReport mc_estimate_serial(int d, std::uint64_t samples, std::uint64_t seed) {
    check_args(d, samples);
    const std::vector<double> widths = box_half_widths(d);
    const std::size_t cells = static_cast<std::size_t>(d / 2) + 1;
    const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
    Tally total(cells);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = c * kChunkSamples;
        const std::uint64_t count = std::min(kChunkSamples, samples - begin);
        total.merge(run_chunk(d, seed, c, count, widths, cells));
    }
    return assemble(d, samples, seed, total);
}

McReport mc_estimate(int d, std::uint64_t samples, std::uint64_t seed, int threads) {
    check_args(d, samples);
#ifndef _OPENMP
    (void)threads;
    return mc_estimate_serial(d, samples, seed);
#else
    const std::vector<double> widths = box_half_widths(d);
    const std::size_t cells = static_cast<std::size_t>(d / 2) + 1;
    const std::int64_t chunks =
        static_cast<std::int64_t>((samples + kChunkSamples - 1) / kChunkSamples);
    Tally total(cells);
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
    {
        Tally local(cells);
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t c = 0; c < chunks; ++c) {
            const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunkSamples;
            const std::uint64_t count = std::min(kChunkSamples, samples - begin);
            local.merge(run_chunk(d, seed, static_cast<std::uint64_t>(c), count, widths, cells));
        }
#pragma omp critical
        total.merge(local);
    }
    return assemble(d, samples, seed, total);
#endif
}

}  // namespace scvol
