#include "scvol/volumes.hpp"

#include <cstddef>
#include <stdexcept>

#include "scvol/alternant.hpp"
#include "scvol/combinatorics.hpp"
#include "scvol/index_set.hpp"
#include "scvol/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scvol {

void validate_signature(int d, int s) {
    if (d < 1) throw std::domain_error("signature: degree d must be >= 1");
    if (s < 0) throw std::domain_error("signature: s must be >= 0");
    if (2 * s > d) throw std::domain_error("signature: need 2s <= d");
}

std::string to_string(RatioMethod m) {
    switch (m) {
        case RatioMethod::Trinomial: return "trinomial";
        case RatioMethod::Hilbert: return "hilbert";
        case RatioMethod::BinomDet: return "binomdet";
        case RatioMethod::EvenAlt: return "evenalt";
        case RatioMethod::DetMix: return "detmix";
    }
    return "?";
}

std::optional<RatioMethod> ratio_method_from_string(std::string_view s) {
    if (s == "trinomial") return RatioMethod::Trinomial;
    if (s == "hilbert") return RatioMethod::Hilbert;
    if (s == "binomdet") return RatioMethod::BinomDet;
    if (s == "evenalt") return RatioMethod::EvenAlt;
    if (s == "detmix") return RatioMethod::DetMix;
    return std::nullopt;
}

Rational v_full(int d) {
    if (d < 1) throw std::domain_error("v_full: degree d must be >= 1");
    Rational result = pow(Rational(2), d);
    for (int j = 1; 2 * j <= d; ++j)
        result *= pow(Rational(2l * j + 1, 2l * j), 2 * j - d);
    return result;
}

Rational v_real(int d) {
    if (d < 1) throw std::domain_error("v_real: degree d must be >= 1");
    Rational result = pow(Rational(2), static_cast<long>(d) * (d + 1) / 2);
    for (int j = 1; j <= d; ++j) {
        Int f = factorial(static_cast<unsigned long>(j - 1));
        result *= Rational(f * f, factorial(static_cast<unsigned long>(2 * j - 1)));
    }
    return result;
}

Rational v_real_det(int d) {
    if (d < 1) throw std::domain_error("v_real_det: degree d must be >= 1");
    const int n = (d + 1) / 2;
    Rational column_factors = 1;  // each column k carries a factor 1/(2k-1)
    std::vector<Rational> ys;
    ys.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        column_factors *= Rational(1, 2l * k - 1);
        ys.emplace_back(2l * k - 1);
    }
    std::vector<Rational> xs;
    const int x_count = d % 2 == 0 ? n : n - 1;
    xs.reserve(static_cast<std::size_t>(x_count));
    for (int j = 1; j <= x_count; ++j) xs.emplace_back(2l * j);
    Rational minor = d % 2 == 0 ? cauchy_alternant(xs, ys) : cauchy_alternant_odd(xs, ys);
    return pow(Rational(2), d) * column_factors * minor;
}

Rational v_totally_complex(int s, ComplexMethod method) {
    if (s < 1) throw std::domain_error("v_totally_complex: s must be >= 1");
    switch (method) {
        case ComplexMethod::Closed: {
            Rational result = pow(Rational(2), static_cast<long>(s) * (4 * s - 1));
            Int denom = factorial(static_cast<unsigned long>(s));
            denom *= denom;
            for (int j = 0; j <= 2 * s - 1; ++j) denom *= binomial(2l * j + 1, j);
            return result / Rational(std::move(denom));
        }
        case ComplexMethod::Determinant: {
            IndexSet full = IndexSet::range(s);
            return pow(Rational(2), 3l * s) * ds_minor(s, full, full);
        }
    }
    throw std::invalid_argument("v_totally_complex: unknown method");
}

namespace {

// Entry kinds of the mixed-volume matrices.
Rational alternant_entry(int j, int k) {
    return Rational(1, Int(4l * j * j - (2l * k - 1) * (2l * k - 1)));
}
Rational product_entry(int j, int k) {
    return Rational(1, Int((2l * k - 1) * (2l * j + 2l * k - 1)));
}
Rational last_row_entry(int k) { return Rational(1, 2l * k - 1); }

// Visits all subsets of {1..n} with exactly s elements, by ascending bitmask.
template <typename Visit>
void for_each_subset_of_size(int n, int s, Visit&& visit) {
    std::vector<int> subset;
    const unsigned long full = 1ul << n;
    for (unsigned long mask = 0; mask < full; ++mask) {
        if (__builtin_popcountl(mask) != s) continue;
        subset.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) subset.push_back(i + 1);
        visit(subset);
    }
}

// Visits every subset of {1..n} (any size), by ascending bitmask.
template <typename Visit>
void for_each_subset(int n, Visit&& visit) {
    std::vector<int> subset;
    const unsigned long full = 1ul << n;
    for (unsigned long mask = 0; mask < full; ++mask) {
        subset.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) subset.push_back(i + 1);
        visit(subset);
    }
}

}  // namespace

Rational v_mixed(int d, int s, MixedVariant variant) {
    if (d < 1) throw std::domain_error("v_mixed: degree d must be >= 1");
    if (s < 0) throw std::domain_error("v_mixed: s must be >= 0");
    if (d % 2 == 0) {
        const int n = d / 2;
        if (s > n) throw std::domain_error("v_mixed: need 2s <= d");
        Rational sum = 0;
        for_each_subset_of_size(n, s, [&](const std::vector<int>& j_set) {
            IndexSet j_idx{std::vector<int>(j_set)};
            RationalMatrix m(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    bool marked = variant == MixedVariant::Rows ? j_idx.contains(j)
                                                                : j_idx.contains(k);
                    m.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) =
                        marked ? alternant_entry(j, k) : product_entry(j, k);
                }
            sum += det(m);
        });
        return pow(Rational(2), 2l * n + s) * sum;
    }
    // Odd degree d = 2n-1: only the row-marked variant exists, for s <= n-1.
    const int n = (d + 1) / 2;
    if (variant == MixedVariant::Cols)
        throw std::domain_error("v_mixed: the cols variant exists only for even degree");
    if (s > n - 1)
        throw std::domain_error("v_mixed: odd degree d = 2n-1 covers only s <= n-1");
    Rational sum = 0;
    for_each_subset_of_size(n - 1, s, [&](const std::vector<int>& j_set) {
        IndexSet j_idx{std::vector<int>(j_set)};
        RationalMatrix m(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Rational entry = j == n            ? last_row_entry(k)
                                 : j_idx.contains(j) ? alternant_entry(j, k)
                                                     : product_entry(j, k);
                m.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = entry;
            }
        sum += det(m);
    });
    return pow(Rational(2), 2l * n + s - 1) * sum;
}

namespace {

// The binomial-determinant kernel shared by ratio(BinomDet) and total_ratio.
Rational binomdet_minor(int d, const std::vector<int>& k_set) {
    const std::size_t m = k_set.size();
    RationalMatrix mat(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            long j = k_set[a], k = k_set[b];
            mat.at(a, b) =
                Rational(binomial(d + 2 * j, 2 * j + 2 * k) * binomial(2 * j + 2 * k - 1, 2 * j - 1));
        }
    return det(mat);
}

}  // namespace

Rational ratio(int d, int s, RatioMethod method) {
    if (method == RatioMethod::DetMix) {
        // Delegated first so the odd-degree range check produces its own diagnostic.
        return v_mixed(d, s, MixedVariant::Rows) / v_real(d);
    }
    validate_signature(d, s);
    if (method == RatioMethod::EvenAlt && d % 2 != 0)
        throw std::domain_error("ratio: method evenalt requires even degree");

    const int big_d = d / 2;
    Rational sum = 0;
    for_each_subset(big_d, [&](const std::vector<int>& k_set) {
        const int ksz = static_cast<int>(k_set.size());
        Int coeff = binomial(big_d - ksz, s - ksz);
        if (sgn(coeff) == 0) return;
        Rational term;
        switch (method) {
            case RatioMethod::Trinomial: {
                term = 1;
                for (int k : k_set)
                    term *= Rational(trinomial(static_cast<unsigned long>(d + 2 * k),
                                               static_cast<unsigned long>(d - 2 * k),
                                               static_cast<unsigned long>(2 * k),
                                               static_cast<unsigned long>(2 * k)),
                                     Int(2));
                for (std::size_t a = 0; a < k_set.size(); ++a)
                    for (std::size_t b = a + 1; b < k_set.size(); ++b) {
                        long j = k_set[a], k = k_set[b];
                        term *= Rational(Int((k - j) * (k - j)), Int((k + j) * (k + j)));
                    }
                break;
            }
            case RatioMethod::Hilbert: {
                Int c = 1;
                for (int k : k_set)
                    c *= binomial(d + 2l * k, 4l * k) * binomial(4l * k - 1, 2l * k - 1) *
                         Int(2l * k);
                term = Rational(std::move(c)) * hilbert_minor(IndexSet{std::vector<int>(k_set)}, 0);
                break;
            }
            case RatioMethod::BinomDet:
                term = binomdet_minor(d, k_set);
                break;
            case RatioMethod::EvenAlt: {
                const long n = big_d;
                Int c = 1;
                for (int k : k_set)
                    c *= binomial(2 * n + 2l * k - 1, 4l * k - 2) *
                         binomial(4l * k - 3, 2l * k - 1) * Int(2l * k - 1);
                term = Rational(std::move(c)) *
                       hilbert_minor(IndexSet{std::vector<int>(k_set)}, -1);
                break;
            }
            case RatioMethod::DetMix:
                return;  // handled above
        }
        term *= Rational(std::move(coeff));
        sum += (s + ksz) % 2 == 0 ? term : -term;
    });
    return sum;
}

Rational ratio_legendre_s1(int d) {
    if (d < 1) throw std::domain_error("ratio_legendre_s1: degree d must be >= 1");
    return (legendre_eval(static_cast<unsigned>(d), Rational(3)) - Rational(2l * d + 1)) /
           Rational(4);
}

Rational total_ratio(int d, TotalMethod method) {
    if (d < 1) throw std::domain_error("total_ratio: degree d must be >= 1");
    switch (method) {
        case TotalMethod::Closed: {
            const long n = (d + 1) / 2;
            const long lo = d % 2 == 0 ? n + 1 : n;
            const long hi = d % 2 == 0 ? 2 * n : 2 * n - 1;
            Int num = 1, den = 1;
            for (long j = lo; j <= hi; ++j) num *= binomial(2 * j, j);
            for (long j = 1; j <= n - 1; ++j) den *= binomial(2 * j, j);
            return Rational(std::move(num), std::move(den)) / pow(Rational(2), n);
        }
        case TotalMethod::Det: {
            std::vector<int> full;
            for (int k = 1; k <= d / 2; ++k) full.push_back(k);
            return binomdet_minor(d, full);
        }
    }
    throw std::invalid_argument("total_ratio: unknown method");
}

Rational volume(int d, int s, RatioMethod method) {
    return v_real(d) * ratio(d, s, method);
}

VolumeTable volume_table(int d_max, int threads) {
    if (d_max < 1) throw std::domain_error("volume_table: d_max must be >= 1");
    std::vector<Signature> cells;
    for (int d = 1; d <= d_max; ++d)
        for (int s = 0; 2 * s <= d; ++s) cells.push_back(Signature{d, s});

    std::vector<Rational> values(cells.size());
    const long count = static_cast<long>(cells.size());
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long i = 0; i < count; ++i)
        values[static_cast<std::size_t>(i)] =
            volume(cells[static_cast<std::size_t>(i)].d, cells[static_cast<std::size_t>(i)].s);
#else
    (void)threads;
    for (long i = 0; i < count; ++i)
        values[static_cast<std::size_t>(i)] =
            volume(cells[static_cast<std::size_t>(i)].d, cells[static_cast<std::size_t>(i)].s);
#endif

    VolumeTable table;
    table.records.reserve(cells.size());
    table.row_sums.assign(static_cast<std::size_t>(d_max), Rational(0));
    table.full_volumes.reserve(static_cast<std::size_t>(d_max));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        table.records.push_back(VolumeRecord{cells[i], values[i], RatioMethod::BinomDet});
        table.row_sums[static_cast<std::size_t>(cells[i].d - 1)] += values[i];
    }
    for (int d = 1; d <= d_max; ++d) table.full_volumes.push_back(v_full(d));
    return table;
}

}  // namespace scvol
