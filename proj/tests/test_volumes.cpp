#include "doctest.h"

#include <stdexcept>

#include "scvol/combinatorics.hpp"
#include "scvol/volumes.hpp"

using namespace scvol;

TEST_CASE("full region volume") {
    CHECK(v_full(1) == Rational(2));
    // Oracle for d=2: the region is the triangle (-2,1), (2,1), (0,-1);
    // shoelace area |x1(y2-y3) + x2(y3-y1) + x3(y1-y2)| / 2.
    Rational area = abs(Rational(-2) * (Rational(1) - Rational(-1)) +
                        Rational(2) * (Rational(-1) - Rational(1)) +
                        Rational(0) * (Rational(1) - Rational(1))) /
                    Rational(2);
    CHECK(area == Rational(4));
    CHECK(v_full(2) == Rational(4));
    CHECK(v_full(4) == Rational(64, 9));
    CHECK_THROWS_AS(v_full(0), std::domain_error);
}

TEST_CASE("all-real volume, product form and determinant form") {
    CHECK(v_real(1) == Rational(2));
    CHECK(v_real(2) == Rational(4, 3));
    CHECK(v_real(3) == Rational(16, 45));
    CHECK(v_real_det(1) == Rational(2));
    CHECK(v_real_det(2) == Rational(4, 3));
    CHECK(v_real_det(3) == Rational(16, 45));
    for (int d = 1; d <= 12; ++d) CHECK(v_real(d) == v_real_det(d));
}

TEST_CASE("totally complex volume, both paths") {
    CHECK(v_totally_complex(1, ComplexMethod::Closed) == Rational(8, 3));
    CHECK(v_totally_complex(1, ComplexMethod::Determinant) == Rational(8, 3));
    CHECK(v_totally_complex(2, ComplexMethod::Determinant) == Rational(2048, 525));
    CHECK(v_totally_complex(2, ComplexMethod::Closed) == Rational(2048, 525));
    for (int s = 1; s <= 6; ++s)
        CHECK(v_totally_complex(s, ComplexMethod::Closed) ==
              v_totally_complex(s, ComplexMethod::Determinant));
    CHECK_THROWS_AS(v_totally_complex(0, ComplexMethod::Closed), std::domain_error);
}

TEST_CASE("mixed determinant-sum volume") {
    CHECK(v_mixed(2, 1, MixedVariant::Rows) == Rational(8, 3));
    CHECK(v_mixed(2, 1, MixedVariant::Cols) == Rational(8, 3));
    CHECK(v_mixed(3, 1, MixedVariant::Rows) == Rational(224, 45));
    CHECK(v_mixed(2, 0, MixedVariant::Rows) == Rational(4, 3));
    CHECK_THROWS_AS(v_mixed(3, 1, MixedVariant::Cols), std::domain_error);
    CHECK_THROWS_AS(v_mixed(3, 2, MixedVariant::Rows), std::domain_error);

    for (int n = 1; n <= 4; ++n)
        for (int s = 0; s <= n; ++s)
            CHECK(v_mixed(2 * n, s, MixedVariant::Rows) == v_mixed(2 * n, s, MixedVariant::Cols));
    for (int d = 1; d <= 8; ++d)
        for (int s = 0; 2 * s <= d; ++s)
            CHECK(v_mixed(d, s, MixedVariant::Rows) ==
                  v_real(d) * ratio(d, s, RatioMethod::BinomDet));
}

TEST_CASE("ratio spot values") {
    // s = 1 values anchored by the Legendre path: (P_d(3) - 2d - 1)/4.
    CHECK(ratio_legendre_s1(1) == Rational(0));
    CHECK(ratio_legendre_s1(2) == Rational(2));
    CHECK(ratio_legendre_s1(3) == Rational(14));
    CHECK(ratio_legendre_s1(4) == Rational(78));

    for (RatioMethod m : {RatioMethod::Trinomial, RatioMethod::Hilbert, RatioMethod::BinomDet,
                          RatioMethod::EvenAlt, RatioMethod::DetMix}) {
        CHECK(ratio(2, 1, m) == Rational(2));
        CHECK(ratio(4, 1, m) == Rational(78));
        CHECK(ratio(4, 2, m) == Rational(96));
    }
    CHECK(ratio(3, 1, RatioMethod::Trinomial) == Rational(14));
    CHECK(ratio(3, 1, RatioMethod::DetMix) == Rational(14));
    CHECK(ratio(12, 0, RatioMethod::BinomDet) == Rational(1));
}

TEST_CASE("ratio rejects invalid input") {
    CHECK_THROWS_AS(ratio(3, 2, RatioMethod::DetMix), std::domain_error);
    CHECK_THROWS_AS(ratio(3, 2, RatioMethod::BinomDet), std::domain_error);
    CHECK_THROWS_AS(ratio(3, 1, RatioMethod::EvenAlt), std::domain_error);
    CHECK_THROWS_AS(ratio(0, 0, RatioMethod::BinomDet), std::domain_error);
    CHECK_THROWS_AS(ratio(4, -1, RatioMethod::BinomDet), std::domain_error);
}

TEST_CASE("all paths agree across the grid") {
    for (int d = 1; d <= 8; ++d)
        for (int s = 0; 2 * s <= d; ++s) {
            Rational reference = ratio(d, s, RatioMethod::BinomDet);
            CHECK(ratio(d, s, RatioMethod::Trinomial) == reference);
            CHECK(ratio(d, s, RatioMethod::Hilbert) == reference);
            CHECK(ratio(d, s, RatioMethod::DetMix) == reference);
            if (d % 2 == 0) CHECK(ratio(d, s, RatioMethod::EvenAlt) == reference);
            if (s == 1) CHECK(ratio_legendre_s1(d) == reference);
            CHECK(reference.is_integer());
        }
}

TEST_CASE("total ratio") {
    CHECK(total_ratio(2, TotalMethod::Closed) == Rational(3));
    CHECK(total_ratio(3, TotalMethod::Closed) == Rational(15));
    CHECK(total_ratio(4, TotalMethod::Closed) == Rational(175));
    CHECK(total_ratio(1, TotalMethod::Closed) == Rational(1));
    // Cross-checks against the summed ratios.
    CHECK(total_ratio(2, TotalMethod::Closed) == Rational(1) + ratio(2, 1, RatioMethod::BinomDet));
    CHECK(total_ratio(3, TotalMethod::Closed) == Rational(1) + ratio(3, 1, RatioMethod::BinomDet));
    CHECK(total_ratio(4, TotalMethod::Closed) ==
          Rational(1) + Rational(78) + Rational(96));
    for (int d = 1; d <= 12; ++d) {
        CHECK(total_ratio(d, TotalMethod::Closed) == total_ratio(d, TotalMethod::Det));
        Rational summed = 0;
        for (int s = 0; 2 * s <= d; ++s) summed += ratio(d, s, RatioMethod::BinomDet);
        CHECK(total_ratio(d, TotalMethod::Closed) == summed);
    }
}

TEST_CASE("partition identity") {
    for (int d = 1; d <= 10; ++d) {
        Rational sum = 0;
        for (int s = 0; 2 * s <= d; ++s) sum += volume(d, s);
        CHECK(sum == v_full(d));
    }
}

TEST_CASE("even-degree closed form for the all-real volume") {
    for (int s = 1; s <= 5; ++s) {
        Int denom = factorial(static_cast<unsigned long>(2 * s));
        for (int j = 0; j <= 2 * s - 1; ++j) denom *= binomial(2l * j + 1, j);
        CHECK(v_real(2 * s) ==
              pow(Rational(2), static_cast<long>(s) * (2 * s + 1)) / Rational(std::move(denom)));
    }
}

TEST_CASE("volume table") {
    VolumeTable t = volume_table(3);
    REQUIRE(t.records.size() == 5);  // (1,0),(2,0),(2,1),(3,0),(3,1)
    CHECK(t.records[0].sig.d == 1);
    CHECK(t.records[0].sig.s == 0);
    CHECK(t.records[0].value == Rational(2));
    CHECK(t.records[1].value == Rational(4, 3));
    CHECK(t.records[2].value == Rational(8, 3));
    CHECK(t.records[4].sig.d == 3);
    CHECK(t.records[4].sig.s == 1);
    CHECK(t.records[4].value == Rational(224, 45));
    for (int d = 1; d <= 3; ++d)
        CHECK(t.row_sums[static_cast<std::size_t>(d - 1)] ==
              t.full_volumes[static_cast<std::size_t>(d - 1)]);
    for (const VolumeRecord& rec : t.records) CHECK(rec.value.sign() > 0);

    VolumeTable t1 = volume_table(1);
    REQUIRE(t1.records.size() == 1);
    CHECK(t1.records[0].value == Rational(2));
}

TEST_CASE("volume table is thread-count independent") {
    VolumeTable serial = volume_table(8, 1);
    VolumeTable parallel = volume_table(8, 4);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].sig.d == parallel.records[i].sig.d);
        CHECK(serial.records[i].sig.s == parallel.records[i].sig.s);
        CHECK(serial.records[i].value == parallel.records[i].value);
    }
}
