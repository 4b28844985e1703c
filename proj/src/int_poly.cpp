#include "int_poly.hpp"

#include <cassert>
#include <stdexcept>

namespace scvol::detail {

void normalize(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly clear_denominators(std::span<const Rational> ascending) {
    Int l = 1;
    for (const Rational& c : ascending)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    IntPoly p;
    p.reserve(ascending.size());
    for (const Rational& c : ascending) p.push_back(c.num() * (l / c.den()));
    normalize(p);
    return p;
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(static_cast<long>(i)));
    normalize(d);
    return d;
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(IntPoly& p) {
    Int g = content(p);
    if (sgn(g) == 0 || g == 1) return;
    for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly prem_neg(const IntPoly& a, const IntPoly& b) {
    assert(!b.empty());
    IntPoly r = a;
    normalize(r);
    const Int& lead_b = b.back();
    const int deg_b = degree(b);
    long scale_steps = 0;
    while (degree(r) >= deg_b) {
        // r <- lead_b * r - lead_r * x^(deg r - deg b) * b
        ++scale_steps;
        Int lead_r = r.back();
        const int shift = degree(r) - deg_b;
        for (Int& c : r) c *= lead_b;
        for (int i = 0; i <= deg_b; ++i)
            r[static_cast<std::size_t>(i + shift)] -= lead_r * b[static_cast<std::size_t>(i)];
        normalize(r);
    }
    // r now equals lead_b^scale_steps * rem(a, b); flip to -rem up to a
    // positive factor.
    const bool scale_negative = sgn(lead_b) < 0 && scale_steps % 2 != 0;
    if (!scale_negative)
        for (Int& c : r) c = -c;
    return r;
}

IntPoly gcd_poly(IntPoly a, IntPoly b) {
    normalize(a);
    normalize(b);
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = prem_neg(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (sgn(a.back()) < 0)
        for (Int& c : a) c = -c;
    return a;
}

IntPoly exact_div(IntPoly a, const IntPoly& b) {
    normalize(a);
    if (b.empty()) throw std::domain_error("exact_div: division by the zero polynomial");
    const int deg_b = degree(b);
    const int deg_q = degree(a) - deg_b;
    if (deg_q < 0) throw std::domain_error("exact_div: quotient is not a polynomial");
    IntPoly q(static_cast<std::size_t>(deg_q) + 1);
    for (int i = deg_q; i >= 0; --i) {
        Int& top = a[static_cast<std::size_t>(i + deg_b)];
        if (sgn(top) == 0) {
            q[static_cast<std::size_t>(i)] = 0;
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()))
            throw std::domain_error("exact_div: inexact division");
        Int qi;
        mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        for (int k = 0; k <= deg_b; ++k)
            a[static_cast<std::size_t>(i + k)] -= qi * b[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(i)] = std::move(qi);
    }
    for (const Int& c : a)
        if (sgn(c) != 0) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

int sturm_distinct_real_roots(const IntPoly& f) {
    if (degree(f) <= 0) return 0;
    std::vector<IntPoly> chain;
    chain.push_back(f);
    IntPoly d = derivative(f);
    make_primitive(d);
    chain.push_back(std::move(d));
    while (degree(chain.back()) > 0) {
        IntPoly next = prem_neg(chain[chain.size() - 2], chain.back());
        if (next.empty()) break;  // not squarefree; callers pass squarefree input
        make_primitive(next);
        chain.push_back(std::move(next));
    }
    auto sign_changes = [&](bool at_minus_infinity) {
        int changes = 0;
        int prev = 0;
        for (const IntPoly& p : chain) {
            if (p.empty()) continue;
            int s = sgn(p.back());
            if (at_minus_infinity && degree(p) % 2 != 0) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++changes;
            if (s != 0) prev = s;
        }
        return changes;
    };
    return sign_changes(true) - sign_changes(false);
}

}  // namespace scvol::detail
