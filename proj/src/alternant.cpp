#include "scvol/alternant.hpp"

#include <stdexcept>
#include <vector>

namespace scvol {

Rational cauchy_alternant(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("cauchy_alternant: sequences must have equal length");
    const std::size_t s = xs.size();
    Rational numerator = 1;
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = j + 1; k < s; ++k)
            numerator *= (xs[j] - xs[k]) * (ys[j] - ys[k]);
    Rational denominator = 1;
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < s; ++k) {
            Rational d = xs[j] + ys[k];
            if (d.is_zero())
                throw std::domain_error("cauchy_alternant: X_j + Y_k = 0, entry undefined");
            denominator *= d;
        }
    return numerator / denominator;
}

Rational cauchy_alternant_odd(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() + 1 != ys.size())
        throw std::invalid_argument("cauchy_alternant_odd: need |X| = |Y| - 1");
    Rational numerator = 1;
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t k = j + 1; k < xs.size(); ++k) numerator *= xs[k] - xs[j];
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t k = j + 1; k < ys.size(); ++k) numerator *= ys[k] - ys[j];
    Rational denominator = 1;
    for (std::size_t j = 0; j < xs.size(); ++j)
        for (std::size_t k = 0; k < ys.size(); ++k) {
            Rational d = xs[j] + ys[k];
            if (d.is_zero())
                throw std::domain_error("cauchy_alternant_odd: X_j + Y_k = 0, entry undefined");
            denominator *= d;
        }
    return numerator / denominator;
}

Rational ds_minor(int s, const IndexSet& rows, const IndexSet& cols) {
    if (s < 1) throw std::invalid_argument("ds_minor: s must be >= 1");
    if (rows.size() != cols.size())
        throw std::invalid_argument("ds_minor: row and column sets must have equal size");
    if ((!rows.empty() && rows[rows.size() - 1] > s) ||
        (!cols.empty() && cols[cols.size() - 1] > s))
        throw std::invalid_argument("ds_minor: indices must lie in {1..s}");
    std::vector<Rational> xs, ys;
    xs.reserve(rows.size());
    ys.reserve(cols.size());
    for (int j : rows) xs.emplace_back(Int(4l * j * j));
    for (int k : cols) ys.emplace_back(Int(-(2l * k - 1) * (2l * k - 1)));
    return cauchy_alternant(xs, ys);
}

Rational hilbert_minor(const IndexSet& k, int shift) {
    if (shift != 0 && shift != -1)
        throw std::invalid_argument("hilbert_minor: shift must be 0 or -1");
    std::vector<Rational> xs, ys;
    xs.reserve(k.size());
    ys.reserve(k.size());
    for (int j : k) {
        xs.emplace_back(long(j));
        ys.emplace_back(long(j + shift));
    }
    return cauchy_alternant(xs, ys);
}

}  // namespace scvol
