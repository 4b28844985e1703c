#include "scvol/matrix.hpp"

#include <utility>

namespace scvol {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Rational det(const RationalMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return Rational(1);

    // Scale each row by the lcm of its denominators; det(M) = det(Z) / prod(scales).
    std::vector<Int> z(n * n);
    Int scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            z[i * n + j] = m.at(i, j).num() * (l / m.at(i, j).den());
        scale_product *= l;
    }

    // Bareiss: every intermediate entry is a determinant of a leading minor,
    // so the divisions below are exact.
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && sgn(z[pivot * n + k]) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(z[pivot * n + j], z[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = z[i * n + j] * z[k * n + k] - z[i * n + k] * z[k * n + j];
                mpz_divexact(z[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i * n + k] = 0;
        }
        prev = z[k * n + k];
    }

    Int num = z[n * n - 1];
    if (sign < 0) num = -num;
    return Rational(std::move(num), std::move(scale_product));
}

}  // namespace scvol
