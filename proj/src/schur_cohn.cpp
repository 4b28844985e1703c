#include "scvol/schur_cohn.hpp"

#include "int_poly.hpp"

namespace scvol {

bool is_contractive(const RealPolynomial& p) {
    using detail::IntPoly;
    // Contractivity is invariant under positive scaling, so work over the
    // integer polynomial obtained by clearing denominators.
    auto ascending = p.ascending();
    IntPoly c = detail::clear_denominators(ascending);
    while (true) {
        const int d = detail::degree(c);
        if (d <= 0) return d == 0;  // nonzero constant has no roots
        const int head_vs_tail = mpz_cmpabs(c[0].get_mpz_t(), c.back().get_mpz_t());
        if (head_vs_tail >= 0) return false;
        IntPoly q(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            q[static_cast<std::size_t>(i)] =
                c.back() * c[static_cast<std::size_t>(i) + 1] -
                c[0] * c[static_cast<std::size_t>(d - 1 - i)];
        detail::normalize(q);
        if (q.empty()) return false;  // self-inversive: roots on the unit circle
        c = std::move(q);
    }
}

}  // namespace scvol
