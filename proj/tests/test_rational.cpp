#include "doctest.h"

#include <stdexcept>

#include "scvol/rational.hpp"
#include "scvol/rng.hpp"

using scvol::Int;
using scvol::Rational;
using scvol::SplitMix64;

TEST_CASE("canonical form is maintained") {
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic agrees with cross-multiplication on random inputs") {
    SplitMix64 rng(12345);
    auto draw = [&rng] {
        long num = static_cast<long>(rng.next() % 2001) - 1000;
        long den = static_cast<long>(rng.next() % 999) + 1;
        return Rational(num, den);
    };
    for (int t = 0; t < 500; ++t) {
        Rational a = draw(), b = draw();
        Rational sum = a + b;
        // Independent route: compare p/q against (ad + cb) / (bd) by cross
        // multiplication without any reduction.
        Int lhs_num = a.num() * b.den() + b.num() * a.den();
        Int lhs_den = a.den() * b.den();
        CHECK(sum.num() * lhs_den == lhs_num * sum.den());

        Rational prod = a * b;
        CHECK(prod.num() * (a.den() * b.den()) == (a.num() * b.num()) * prod.den());

        // Results stay canonical.
        Int g;
        mpz_gcd(g.get_mpz_t(), sum.num().get_mpz_t(), sum.den().get_mpz_t());
        CHECK(g == 1);
        mpz_gcd(g.get_mpz_t(), prod.num().get_mpz_t(), prod.den().get_mpz_t());
        CHECK(g == 1);
        CHECK(sum.den() > 0);
        CHECK(prod.den() > 0);
    }
}

TEST_CASE("division and inverse") {
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(Rational(-5, 7).inverse() == Rational(-7, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(scvol::abs(Rational(-3, 5)) == Rational(3, 5));
}

TEST_CASE("pow handles negative exponents") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("from_double is exact") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-0.375) == Rational(-3, 8));
    CHECK(Rational::from_double(0.0) == Rational(0));
    SplitMix64 rng(99);
    for (int t = 0; t < 200; ++t) {
        double x = (rng.next_unit() - 0.5) * 64.0;
        Rational r = Rational::from_double(x);
        CHECK(r.to_double() == x);
        // dyadic denominator
        CHECK(mpz_popcount(r.den().get_mpz_t()) == 1);
    }
    CHECK_THROWS_AS(Rational::from_double(1.0 / 0.0), std::domain_error);
}

TEST_CASE("string round trips and wire form") {
    CHECK(Rational::from_string("224/45") == Rational(224, 45));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("4/-6") == Rational(-2, 3));
    CHECK(Rational(8, 3).str() == "8/3");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(4).fraction_str() == "4/1");
    CHECK(Rational(-1, 2).fraction_str() == "-1/2");
    CHECK_THROWS_AS(Rational::from_string("a/b"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    SplitMix64 rng(7);
    for (int t = 0; t < 100; ++t) {
        Rational r(static_cast<long>(rng.next() % 9999) - 5000,
                   static_cast<long>(rng.next() % 999) + 1);
        CHECK(Rational::from_string(r.fraction_str()) == r);
    }
}
