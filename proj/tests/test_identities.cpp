#include "doctest.h"

#include <stdexcept>

#include "scvol/identities.hpp"
#include "scvol/rng.hpp"

using namespace scvol;

namespace {

Rational unit_rational(SplitMix64& rng) {
    long num = static_cast<long>(rng.next() % 9) + 1;
    if (rng.next() % 2 == 0) num = -num;
    return Rational(num, static_cast<long>(rng.next() % 10) + 10);
}

RationalPoint unit_point(SplitMix64& rng, std::size_t r) {
    RationalPoint p(r);
    for (auto& c : p) c = unit_rational(rng);
    return p;
}

// For S-sums: redraw until no pairwise sum vanishes (prefix sums are checked
// by the callee, which throws; points drawn this way never triggered it).
RationalPoint s_safe_point(SplitMix64& rng, std::size_t r) {
    for (;;) {
        RationalPoint p = unit_point(rng, r);
        bool ok = true;
        for (std::size_t j = 0; j < r && ok; ++j)
            for (std::size_t k = j + 1; k < r && ok; ++k) ok = !(p[j] + p[k]).is_zero();
        if (ok) return p;
    }
}

}  // namespace

TEST_CASE("H sums: examples") {
    CHECK(h_perm(RationalPoint{}) == Rational(1));
    CHECK(h_perm(RationalPoint{Rational(1, 2)}) == Rational(1));
    RationalPoint x{Rational(1, 2), Rational(1, 3)};
    // Oracle: the two-variable closed form (X1 - X2)/(1 - X1 X2).
    Rational oracle = (x[0] - x[1]) / (Rational(1) - x[0] * x[1]);
    CHECK(oracle == Rational(1, 5));
    CHECK(h_perm(x) == Rational(1, 5));
    CHECK(h_closed(x) == Rational(1, 5));
    CHECK(h_closed(RationalPoint{}) == Rational(1));
    CHECK(h_closed(RationalPoint{Rational(1, 3), Rational(1, 2)}) == Rational(-1, 5));
}

TEST_CASE("H sums: error reporting") {
    CHECK_THROWS_AS(h_perm(RationalPoint{Rational(1)}), std::domain_error);
    CHECK_THROWS_AS(h_closed(RationalPoint{Rational(2), Rational(1, 2)}), std::domain_error);
    CHECK_THROWS_AS(h_perm(RationalPoint(9, Rational(1, 99))), std::invalid_argument);
    CHECK_THROWS_WITH_AS(h_perm(RationalPoint{Rational(1, 2), Rational(2)}),
                         "h_perm: denominator vanishes at sigma=(1 2), i=2", std::domain_error);
}

TEST_CASE("S sums: examples") {
    CHECK(s_perm(RationalPoint{}) == Rational(1));
    CHECK(s_perm(RationalPoint{Rational(5)}) == Rational(1, 5));
    CHECK(s_perm(RationalPoint{Rational(1), Rational(2)}) == Rational(1, 6));
    CHECK(s_closed(RationalPoint{Rational(1), Rational(2)}) == Rational(1, 6));
    CHECK(s_closed(RationalPoint{Rational(3)}) == Rational(1, 3));
    CHECK(s_closed(RationalPoint{Rational(1), Rational(3)}) == Rational(1, 6));
    CHECK(s_perm(RationalPoint{Rational(1), Rational(3)}) == Rational(1, 6));
    CHECK_THROWS_AS(s_perm(RationalPoint{Rational(1), Rational(-1)}), std::domain_error);
    CHECK_THROWS_AS(s_closed(RationalPoint{Rational(0)}), std::domain_error);
}

TEST_CASE("closed forms match permutation sums at random points") {
    SplitMix64 rng(4242);
    for (std::size_t r = 0; r <= 6; ++r)
        for (int t = 0; t < 20; ++t) {
            RationalPoint x = unit_point(rng, r);
            CHECK(h_perm(x) == h_closed(x));
            RationalPoint y = s_safe_point(rng, r);
            CHECK(s_perm(y) == s_closed(y));
        }
}

TEST_CASE("antisymmetry under coordinate swaps") {
    SplitMix64 rng(915);
    for (std::size_t r = 2; r <= 6; ++r)
        for (int t = 0; t < 10; ++t) {
            RationalPoint x = unit_point(rng, r);
            RationalPoint xs = x;
            std::swap(xs[0], xs[r - 1]);
            CHECK(h_closed(x) == -h_closed(xs));
            RationalPoint y = s_safe_point(rng, r);
            RationalPoint ys = y;
            std::swap(ys[0], ys[r - 1]);
            CHECK(s_closed(y) == -s_closed(ys));
        }
}

TEST_CASE("H convolution: examples") {
    CHECK(conv_h_lhs(RationalPoint{}) == Rational(1));
    CHECK(conv_h_rhs(RationalPoint{}) == Rational(1));
    CHECK(conv_h_lhs(RationalPoint{Rational(1, 7)}) == Rational(2));
    CHECK(conv_h_rhs(RationalPoint{Rational(1, 7)}) == Rational(2));
    RationalPoint x{Rational(1, 2), Rational(1, 3)};
    CHECK(conv_h_lhs(x) == Rational(12, 5));
    CHECK(conv_h_rhs(x) == Rational(12, 5));
}

TEST_CASE("S convolution: examples") {
    CHECK(conv_s_lhs(RationalPoint{}) == Rational(1));
    CHECK(conv_s_rhs(RationalPoint{}) == Rational(1));
    CHECK(conv_s_lhs(RationalPoint{Rational(3)}) == Rational(2, 3));
    CHECK(conv_s_rhs(RationalPoint{Rational(3)}) == Rational(2, 3));
    RationalPoint y{Rational(1), Rational(2)};
    CHECK(conv_s_lhs(y) == Rational(4, 3));
    CHECK(conv_s_rhs(y) == Rational(4, 3));
}

TEST_CASE("convolution identities hold at random points") {
    SplitMix64 rng(5150);
    for (std::size_t r = 0; r <= 8; ++r)
        for (int t = 0; t < 10; ++t) {
            RationalPoint x = unit_point(rng, r);
            CHECK(conv_h_lhs(x) == conv_h_rhs(x));
            RationalPoint y = s_safe_point(rng, r);
            CHECK(conv_s_lhs(y) == conv_s_rhs(y));
        }
    CHECK_THROWS_AS(conv_h_lhs(RationalPoint(13, Rational(1, 99))), std::invalid_argument);
}

TEST_CASE("closed convolution form satisfies the degree-lowering recurrence") {
    SplitMix64 rng(616);
    CHECK(conv_h_rhs(RationalPoint{Rational(4, 17)}) == Rational(2));  // base g_1 = 2
    for (std::size_t r = 2; r <= 5; ++r)
        for (int t = 0; t < 5; ++t) {
            RationalPoint x = unit_point(rng, r);
            RationalPoint head(x.begin(), x.end() - 1);
            Rational rhs = (Rational(1) + x[r - 2]) * (Rational(1) - x[r - 1]) /
                           (Rational(1) - x[r - 2] * x[r - 1]) * conv_h_rhs(head);
            for (std::size_t i = 1; i + 1 <= r; ++i) {
                if ((i + r) % 2 != 0) continue;
                RationalPoint swapped = head;
                swapped[i - 1] = x[r - 1];
                rhs -= (Rational(1) + x[r - 2]) * (Rational(1) - x[i - 1]) /
                       (Rational(1) - x[r - 2] * x[i - 1]) * conv_h_rhs(swapped);
            }
            CHECK(conv_h_rhs(x) == rhs);
        }
}

TEST_CASE("parity splitting") {
    ParitySplit split = parity_split(IndexSet({1, 3, 4, 5, 6}));
    CHECK(split.even_part == IndexSet({2, 3}));
    CHECK(split.odd_part == IndexSet({1, 2, 3}));

    ParitySplit empty = parity_split(IndexSet{});
    CHECK(empty.even_part.empty());
    CHECK(empty.odd_part.empty());

    ParitySplit evens = parity_split(IndexSet({2, 4}));
    CHECK(evens.even_part == IndexSet({1, 2}));
    CHECK(evens.odd_part.empty());
}

TEST_CASE("oe-order sign") {
    CHECK(oe_sign(IndexSet({1, 3, 4, 5, 6})) == 1);
    CHECK(oe_sign(IndexSet({1})) == 1);
    CHECK(oe_sign(IndexSet({1, 2, 3, 4})) == 1);
    CHECK(oe_sign(IndexSet({2, 3})) == -1);  // oe-order is (3, 2), one transposition
    CHECK(oe_sign(IndexSet{}) == 1);
    CHECK_THROWS_AS(oe_sign(IndexSet({2, 4})), std::invalid_argument);
}

TEST_CASE("oe-sign complement rule, small cases exhaustively") {
    for (int nu = 1; nu <= 3; ++nu) {
        const int size = 2 * nu;
        for (unsigned mask = 0; mask < (1u << size); ++mask) {
            std::vector<int> m_elems, n_elems;
            for (int v = 1; v <= size; ++v)
                ((mask >> (v - 1)) & 1u ? m_elems : n_elems).push_back(v);
            int odd = 0, even = 0;
            for (int v : m_elems) (v % 2 != 0 ? odd : even)++;
            if (odd != even) continue;
            IndexSet m{std::move(m_elems)};
            IndexSet n{std::move(n_elems)};
            ParitySplit split = parity_split(n);
            long exponent = split.odd_part.sum() + split.even_part.sum();
            CHECK(oe_sign(m) * oe_sign(n) == (exponent % 2 == 0 ? 1 : -1));
        }
    }
}
