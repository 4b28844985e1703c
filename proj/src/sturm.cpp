#include "scvol/sturm.hpp"

#include "int_poly.hpp"

namespace scvol {

int real_root_count(const RealPolynomial& p) {
    using detail::IntPoly;
    auto ascending = p.ascending();
    IntPoly f = detail::clear_denominators(ascending);
    detail::make_primitive(f);
    IntPoly g = detail::gcd_poly(f, detail::derivative(f));
    if (detail::degree(g) >= 1) {
        f = detail::exact_div(f, g);
        detail::make_primitive(f);
    }
    return detail::sturm_distinct_real_roots(f);
}

std::optional<PolySignature> signature_of(const RealPolynomial& p) {
    using detail::IntPoly;
    auto ascending = p.ascending();
    IntPoly f = detail::clear_denominators(ascending);
    detail::make_primitive(f);
    IntPoly g = detail::gcd_poly(f, detail::derivative(f));
    if (detail::degree(g) >= 1) return std::nullopt;
    int real_roots = detail::sturm_distinct_real_roots(f);
    return PolySignature{real_roots, (p.degree() - real_roots) / 2};
}

}  // namespace scvol
