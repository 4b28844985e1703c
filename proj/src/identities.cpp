#include "scvol/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace scvol {

namespace {

// Visits all permutations of {0..r-1} in lexicographic one-line order.
// The running sign is maintained incrementally: each step is one
// transposition plus a suffix reversal, i.e. 1 + floor(m/2) transpositions.
template <typename Visit>
void for_each_permutation(std::size_t r, Visit&& visit) {
    std::vector<std::size_t> p(r);
    for (std::size_t i = 0; i < r; ++i) p[i] = i;
    int sign = 1;
    for (;;) {
        visit(p, sign);
        if (r < 2) return;
        std::size_t i = r - 1;
        while (i > 0 && p[i - 1] >= p[i]) --i;
        if (i == 0) return;
        --i;  // largest i with p[i] < p[i+1]
        std::size_t j = r - 1;
        while (p[j] <= p[i]) --j;
        std::swap(p[i], p[j]);
        std::reverse(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.end());
        std::size_t flips = 1 + (r - 1 - i) / 2;
        if (flips % 2 != 0) sign = -sign;
    }
}

std::string permutation_str(const std::vector<std::size_t>& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i] + 1;
    os << ")";
    return os.str();
}

}  // namespace

Rational h_perm(std::span<const Rational> x) {
    const std::size_t r = x.size();
    if (r > kPermutationCap)
        throw std::invalid_argument("h_perm: point size exceeds the brute-force cap");
    if (r == 0) return Rational(1);

    Rational numerator = 1;
    for (const Rational& xi : x) numerator *= Rational(1) - xi;

    Rational sum = 0;
    for_each_permutation(r, [&](const std::vector<std::size_t>& p, int sign) {
        Rational prefix = 1;
        Rational denom = 1;
        for (std::size_t i = 0; i < r; ++i) {
            prefix *= x[p[i]];
            Rational factor = Rational(1) - prefix;
            if (factor.is_zero())
                throw std::domain_error("h_perm: denominator vanishes at sigma=" +
                                        permutation_str(p) + ", i=" + std::to_string(i + 1));
            denom *= factor;
        }
        Rational term = numerator / denom;
        sum += sign > 0 ? term : -term;
    });
    return sum;
}

Rational h_closed(std::span<const Rational> x) {
    const std::size_t r = x.size();
    Rational result = 1;
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = j + 1; k < r; ++k) {
            Rational denom = Rational(1) - x[j] * x[k];
            if (denom.is_zero()) throw std::domain_error("h_closed: X_j X_k = 1");
            result *= (x[j] - x[k]) / denom;
        }
    return result;
}

Rational s_perm(std::span<const Rational> y) {
    const std::size_t r = y.size();
    if (r > kPermutationCap)
        throw std::invalid_argument("s_perm: point size exceeds the brute-force cap");
    if (r == 0) return Rational(1);

    Rational sum = 0;
    for_each_permutation(r, [&](const std::vector<std::size_t>& p, int sign) {
        Rational prefix = 0;
        Rational denom = 1;
        for (std::size_t i = 0; i < r; ++i) {
            prefix += y[p[i]];
            if (prefix.is_zero())
                throw std::domain_error("s_perm: prefix sum vanishes at sigma=" +
                                        permutation_str(p) + ", i=" + std::to_string(i + 1));
            denom *= prefix;
        }
        Rational term = denom.inverse();
        sum += sign > 0 ? term : -term;
    });
    return sum;
}

Rational s_closed(std::span<const Rational> y) {
    const std::size_t r = y.size();
    Rational result = 1;
    for (std::size_t j = 0; j < r; ++j) {
        if (y[j].is_zero()) throw std::domain_error("s_closed: Y_j = 0");
        result /= y[j];
    }
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = j + 1; k < r; ++k) {
            Rational denom = y[k] + y[j];
            if (denom.is_zero()) throw std::domain_error("s_closed: Y_j + Y_k = 0");
            result *= (y[k] - y[j]) / denom;
        }
    return result;
}

namespace {

// Shared skeleton of the convolution left-hand sides: the factor values are
// memoized per subset mask, then paired with the complement mask.
template <typename Factor>
Rational subset_convolution(std::span<const Rational> v, Factor&& factor) {
    const std::size_t r = v.size();
    if (r > kSubsetCap)
        throw std::invalid_argument("subset convolution: point size exceeds the subset cap");
    const std::size_t full = (std::size_t{1} << r) - 1;
    std::vector<Rational> value(full + 1);
    RationalPoint subset;
    subset.reserve(r);
    for (std::size_t mask = 0; mask <= full; ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(v[i]);
        value[mask] = factor(subset);
    }
    Rational sum = 0;
    for (std::size_t mask = 0; mask <= full; ++mask) sum += value[mask] * value[full ^ mask];
    return sum;
}

}  // namespace

Rational conv_h_lhs(std::span<const Rational> x) {
    return subset_convolution(x, [](const RationalPoint& s) { return h_closed(s); });
}

Rational conv_h_rhs(std::span<const Rational> x) {
    const std::size_t r = x.size();
    Rational result = pow(Rational(2), static_cast<long>((r + 1) / 2));
    for (std::size_t j = 1; j <= r; ++j) {
        if ((j + r) % 2 == 1) result *= Rational(1) + x[j - 1];
        if (j % 2 == 0) result *= Rational(1) - x[j - 1];
    }
    for (std::size_t j = 1; j <= r; ++j)
        for (std::size_t k = j + 1; k <= r; ++k) {
            if ((k - j) % 2 == 0) {
                result *= x[j - 1] - x[k - 1];
            } else {
                Rational denom = Rational(1) - x[j - 1] * x[k - 1];
                if (denom.is_zero()) throw std::domain_error("conv_h_rhs: X_j X_k = 1");
                result /= denom;
            }
        }
    return result;
}

Rational conv_s_lhs(std::span<const Rational> y) {
    return subset_convolution(y, [](const RationalPoint& s) { return s_closed(s); });
}

Rational conv_s_rhs(std::span<const Rational> y) {
    const std::size_t r = y.size();
    Rational result = pow(Rational(2), static_cast<long>(r));
    for (std::size_t j = 1; j <= r; ++j)
        if (j % 2 == 1) {
            if (y[j - 1].is_zero()) throw std::domain_error("conv_s_rhs: Y_j = 0 at odd j");
            result /= y[j - 1];
        }
    for (std::size_t j = 1; j <= r; ++j)
        for (std::size_t k = j + 1; k <= r; ++k) {
            if ((k - j) % 2 == 0) {
                result *= y[k - 1] - y[j - 1];
            } else {
                Rational denom = y[k - 1] + y[j - 1];
                if (denom.is_zero()) throw std::domain_error("conv_s_rhs: Y_j + Y_k = 0");
                result /= denom;
            }
        }
    return result;
}

ParitySplit parity_split(const IndexSet& x) {
    std::vector<int> evens, odds;
    for (int v : x) {
        if (v % 2 == 0)
            evens.push_back(v / 2);
        else
            odds.push_back((v + 1) / 2);
    }
    return ParitySplit{IndexSet(std::move(evens)), IndexSet(std::move(odds))};
}

int oe_sign(const IndexSet& x) {
    std::vector<int> odds, evens;
    for (int v : x) (v % 2 != 0 ? odds : evens).push_back(v);
    const std::size_t m = x.size();
    if (odds.size() != (m + 1) / 2 || evens.size() != m / 2)
        throw std::invalid_argument(
            "oe_sign: need ceil(|X|/2) odd and floor(|X|/2) even elements");

    // Interleave odd, even, odd, even, ... and count inversions of the
    // position permutation relative to ascending order.
    std::vector<int> target;
    target.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        target.push_back(i % 2 == 0 ? odds[i / 2] : evens[i / 2]);

    std::vector<std::size_t> pos(m);
    const std::vector<int>& sorted = x.elements();
    for (std::size_t i = 0; i < m; ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), target[i]);
        pos[i] = static_cast<std::size_t>(it - sorted.begin());
    }
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pos[i] > pos[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace scvol
