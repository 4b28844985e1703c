#include "scvol/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "scvol/alternant.hpp"
#include "scvol/combinatorics.hpp"
#include "scvol/identities.hpp"
#include "scvol/rng.hpp"
#include "scvol/volumes.hpp"

namespace scvol {

namespace {

// Test points use numerators in [-9,9]\{0} and denominators in [10,19], so
// every coordinate lies in (-1,1)\{0} and 1 - X_j X_k never vanishes. Points
// violating a caller-specific precondition are redrawn.
Rational random_unit_rational(SplitMix64& rng) {
    long num = static_cast<long>(rng.next() % 9) + 1;
    if (rng.next() % 2 == 0) num = -num;
    long den = static_cast<long>(rng.next() % 10) + 10;
    return Rational(num, den);
}

RationalPoint random_point(SplitMix64& rng, std::size_t r) {
    RationalPoint p(r);
    for (auto& c : p) c = random_unit_rational(rng);
    return p;
}

bool has_vanishing_pairwise_sum(const RationalPoint& p) {
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t k = j + 1; k < p.size(); ++k)
            if ((p[j] + p[k]).is_zero()) return true;
    return false;
}

// Checks every permutation prefix sum; cheap at the sizes used here.
bool has_vanishing_prefix_sum(const RationalPoint& p) {
    std::vector<std::size_t> idx(p.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    bool found = false;
    std::function<void(std::size_t, const Rational&)> walk = [&](std::size_t used,
                                                                 const Rational& sum) {
        if (found) return;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (used & (std::size_t{1} << i)) continue;
            Rational next = sum + p[i];
            if (next.is_zero()) {
                found = true;
                return;
            }
            walk(used | (std::size_t{1} << i), next);
        }
    };
    walk(0, Rational(0));
    return found;
}

RationalPoint s_point(SplitMix64& rng, std::size_t r, bool need_prefix_sums) {
    for (;;) {
        RationalPoint p = random_point(rng, r);
        bool bad = has_vanishing_pairwise_sum(p);
        if (!bad && need_prefix_sums) bad = has_vanishing_prefix_sum(p);
        if (!bad) return p;
    }
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.suite = suite_;
        r.name = name;
        try {
            r.detail = body();  // empty string = pass
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

std::string point_str(const RationalPoint& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
    os << "]";
    return os.str();
}

std::vector<CheckResult> run_identities() {
    SuiteBuilder b("identities");
    b.check("h_perm equals h_closed (r <= 6, 100 points each)", [] {
        SplitMix64 rng(0x5c01ull);
        for (std::size_t r = 0; r <= 6; ++r)
            for (int t = 0; t < 100; ++t) {
                RationalPoint x = random_point(rng, r);
                if (h_perm(x) != h_closed(x)) return "counterexample at x=" + point_str(x);
            }
        return std::string();
    });
    b.check("s_perm equals s_closed (r <= 6, 100 points each)", [] {
        SplitMix64 rng(0x5c02ull);
        for (std::size_t r = 0; r <= 6; ++r)
            for (int t = 0; t < 100; ++t) {
                RationalPoint y = s_point(rng, r, true);
                if (s_perm(y) != s_closed(y)) return "counterexample at y=" + point_str(y);
            }
        return std::string();
    });
    b.check("h_closed antisymmetry under coordinate swap", [] {
        SplitMix64 rng(0x5c03ull);
        for (std::size_t r = 2; r <= 6; ++r)
            for (int t = 0; t < 50; ++t) {
                RationalPoint x = random_point(rng, r);
                RationalPoint y = x;
                std::size_t i = rng.next() % r;
                std::size_t j = (i + 1 + rng.next() % (r - 1)) % r;
                std::swap(y[i], y[j]);
                if (h_closed(x) != -h_closed(y)) return "counterexample at x=" + point_str(x);
            }
        return std::string();
    });
    b.check("s_closed antisymmetry under coordinate swap", [] {
        SplitMix64 rng(0x5c04ull);
        for (std::size_t r = 2; r <= 6; ++r)
            for (int t = 0; t < 50; ++t) {
                RationalPoint x = s_point(rng, r, false);
                RationalPoint y = x;
                std::size_t i = rng.next() % r;
                std::size_t j = (i + 1 + rng.next() % (r - 1)) % r;
                std::swap(y[i], y[j]);
                if (s_closed(x) != -s_closed(y)) return "counterexample at x=" + point_str(x);
            }
        return std::string();
    });
    return b.take();
}

std::vector<CheckResult> run_convolution() {
    SuiteBuilder b("convolution");
    b.check("H convolution: subset sum equals closed form (r <= 8, 50 points)", [] {
        SplitMix64 rng(0x5c11ull);
        for (std::size_t r = 0; r <= 8; ++r)
            for (int t = 0; t < 50; ++t) {
                RationalPoint x = random_point(rng, r);
                if (conv_h_lhs(x) != conv_h_rhs(x)) return "counterexample at x=" + point_str(x);
            }
        return std::string();
    });
    b.check("S convolution: subset sum equals closed form (r <= 8, 50 points)", [] {
        SplitMix64 rng(0x5c12ull);
        for (std::size_t r = 0; r <= 8; ++r)
            for (int t = 0; t < 50; ++t) {
                RationalPoint y = s_point(rng, r, false);
                if (conv_s_lhs(y) != conv_s_rhs(y)) return "counterexample at y=" + point_str(y);
            }
        return std::string();
    });
    b.check("closed convolution form satisfies its recurrence (2 <= r <= 6, 20 points)", [] {
        // g_r(X) = (1+X_{r-1})(1-X_r)/(1-X_{r-1}X_r) g_{r-1}(X_1..X_{r-1})
        //        - sum_{i+r even} (1+X_{r-1})(1-X_i)/(1-X_{r-1}X_i)
        //                         g_{r-1}(X_1..X_{i-1}, X_r, X_{i+1}..X_{r-1}),
        // with g_1 = 2.
        SplitMix64 rng(0x5c13ull);
        for (std::size_t r = 2; r <= 6; ++r)
            for (int t = 0; t < 20; ++t) {
                RationalPoint x = random_point(rng, r);
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
                if (conv_h_rhs(x) != rhs) return "counterexample at x=" + point_str(x);
            }
        return std::string();
    });
    return b.take();
}

std::vector<CheckResult> run_signs() {
    SuiteBuilder b("signs");
    b.check("oe-sign product rule over complements (exhaustive, nu <= 5)", [] {
        // For parity-balanced M inside {1..2nu} with complement N split into
        // (N1, N2): oe_sign(M) oe_sign(N) = (-1)^(sum N1 + sum N2).
        for (int nu = 1; nu <= 5; ++nu) {
            const int size = 2 * nu;
            for (unsigned mask = 0; mask < (1u << size); ++mask) {
                std::vector<int> m_elems, n_elems;
                for (int v = 1; v <= size; ++v)
                    ((mask >> (v - 1)) & 1u ? m_elems : n_elems).push_back(v);
                int odd = 0, even = 0;
                for (int v : m_elems) (v % 2 != 0 ? odd : even)++;
                if (odd != even) continue;  // not parity balanced
                IndexSet m{std::move(m_elems)};
                IndexSet n{std::move(n_elems)};
                ParitySplit split = parity_split(n);
                long exponent = split.odd_part.sum() + split.even_part.sum();
                int expected = exponent % 2 == 0 ? 1 : -1;
                if (oe_sign(m) * oe_sign(n) != expected) {
                    std::ostringstream os;
                    os << "counterexample at nu=" << nu << ", mask=" << mask;
                    return os.str();
                }
            }
        }
        return std::string();
    });
    b.check("parity split reconstructs its source set (random sets)", [] {
        SplitMix64 rng(0x5c21ull);
        for (int t = 0; t < 200; ++t) {
            std::vector<int> elems;
            for (int v = 1; v <= 16; ++v)
                if (rng.next() % 2 == 0) elems.push_back(v);
            IndexSet x{std::vector<int>(elems)};
            ParitySplit split = parity_split(x);
            std::vector<int> rebuilt;
            for (int e : split.even_part) rebuilt.push_back(2 * e);
            for (int o : split.odd_part) rebuilt.push_back(2 * o - 1);
            std::sort(rebuilt.begin(), rebuilt.end());
            if (rebuilt != elems) return std::string("reconstruction failed");
        }
        return std::string();
    });
    return b.take();
}

std::vector<CheckResult> run_volumes() {
    SuiteBuilder b("volumes");
    b.check("all ratio paths agree (d <= 12, every s)", [] {
        for (int d = 1; d <= 12; ++d)
            for (int s = 0; 2 * s <= d; ++s) {
                Rational reference = ratio(d, s, RatioMethod::BinomDet);
                for (RatioMethod m : {RatioMethod::Trinomial, RatioMethod::Hilbert,
                                      RatioMethod::EvenAlt, RatioMethod::DetMix}) {
                    if (m == RatioMethod::EvenAlt && d % 2 != 0) continue;
                    if (ratio(d, s, m) != reference) {
                        std::ostringstream os;
                        os << "mismatch at d=" << d << ", s=" << s << ", method="
                           << to_string(m);
                        return os.str();
                    }
                }
                if (s == 1 && ratio_legendre_s1(d) != reference)
                    return std::string("legendre path mismatch at d=") + std::to_string(d);
            }
        return std::string();
    });
    b.check("totally complex ratio equals 2^(2s(s-1)) C(2s,s) (s <= 6)", [] {
        for (int s = 1; s <= 6; ++s) {
            Rational expected =
                pow(Rational(2), 2l * s * (s - 1)) * Rational(binomial(2 * s, s));
            if (ratio(2 * s, s, RatioMethod::BinomDet) != expected)
                return std::string("mismatch at s=") + std::to_string(s);
        }
        return std::string();
    });
    b.check("row- and column-marked determinant sums agree (even d <= 10)", [] {
        for (int n = 1; n <= 5; ++n)
            for (int s = 0; s <= n; ++s) {
                if (v_mixed(2 * n, s, MixedVariant::Rows) !=
                    v_mixed(2 * n, s, MixedVariant::Cols)) {
                    std::ostringstream os;
                    os << "mismatch at d=" << 2 * n << ", s=" << s;
                    return os.str();
                }
            }
        return std::string();
    });
    b.check("determinant-sum volume equals v_real * ratio (d <= 10)", [] {
        for (int d = 1; d <= 10; ++d)
            for (int s = 0; 2 * s <= d; ++s) {
                if (v_mixed(d, s, MixedVariant::Rows) !=
                    v_real(d) * ratio(d, s, RatioMethod::BinomDet)) {
                    std::ostringstream os;
                    os << "mismatch at d=" << d << ", s=" << s;
                    return os.str();
                }
            }
        return std::string();
    });
    b.check("signature volumes sum to the full volume (d <= 12)", [] {
        for (int d = 1; d <= 12; ++d) {
            Rational sum = 0;
            for (int s = 0; 2 * s <= d; ++s) sum += volume(d, s);
            if (sum != v_full(d)) return std::string("mismatch at d=") + std::to_string(d);
        }
        return std::string();
    });
    b.check("v_real equals its determinant form (d <= 12)", [] {
        for (int d = 1; d <= 12; ++d)
            if (v_real(d) != v_real_det(d))
                return std::string("mismatch at d=") + std::to_string(d);
        return std::string();
    });
    b.check("even-degree v_real closed form (s <= 6)", [] {
        // v_{2s}^(0) = (2^(s(2s+1)) / (2s)!) / prod_{j=0}^{2s-1} C(2j+1, j).
        for (int s = 1; s <= 6; ++s) {
            Int denom = factorial(static_cast<unsigned long>(2 * s));
            for (int j = 0; j <= 2 * s - 1; ++j) denom *= binomial(2l * j + 1, j);
            Rational expected =
                pow(Rational(2), static_cast<long>(s) * (2 * s + 1)) / Rational(std::move(denom));
            if (v_real(2 * s) != expected)
                return std::string("mismatch at s=") + std::to_string(s);
        }
        return std::string();
    });
    b.check("alternant minor quotient recurrence (s <= 8)", [] {
        // D_{s+1}/D_s = 2^(8s) / ((s+1)^2 C(4s+3, 2s+1) C(4s+1, 2s)).
        for (int s = 1; s <= 8; ++s) {
            IndexSet lo = IndexSet::range(s);
            IndexSet hi = IndexSet::range(s + 1);
            Rational quotient = ds_minor(s + 1, hi, hi) / ds_minor(s, lo, lo);
            Rational expected =
                pow(Rational(2), 8l * s) /
                Rational(Int(s + 1) * Int(s + 1) * binomial(4l * s + 3, 2l * s + 1) *
                         binomial(4l * s + 1, 2l * s));
            if (quotient != expected) return std::string("mismatch at s=") + std::to_string(s);
        }
        return std::string();
    });
    b.check("totally complex volume: closed form equals determinant form (s <= 6)", [] {
        for (int s = 1; s <= 6; ++s)
            if (v_totally_complex(s, ComplexMethod::Closed) !=
                v_totally_complex(s, ComplexMethod::Determinant))
                return std::string("mismatch at s=") + std::to_string(s);
        return std::string();
    });
    b.check("total ratio: closed form equals determinant form (d <= 12)", [] {
        for (int d = 1; d <= 12; ++d)
            if (total_ratio(d, TotalMethod::Closed) != total_ratio(d, TotalMethod::Det))
                return std::string("mismatch at d=") + std::to_string(d);
        return std::string();
    });
    return b.take();
}

std::vector<CheckResult> run_integrality() {
    SuiteBuilder b("integrality");
    b.check("ratio denominators are 1 (d <= 12, every s)", [] {
        for (int d = 1; d <= 12; ++d)
            for (int s = 0; 2 * s <= d; ++s) {
                Rational r = ratio(d, s, RatioMethod::BinomDet);
                if (!r.is_integer()) {
                    std::ostringstream os;
                    os << "non-integer " << r << " at d=" << d << ", s=" << s;
                    return os.str();
                }
            }
        return std::string();
    });
    return b.take();
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"identities", "convolution", "signs", "volumes", "integrality"};
}

std::vector<CheckResult> verify_suite(std::string_view name) {
    if (name == "identities") return run_identities();
    if (name == "convolution") return run_convolution();
    if (name == "signs") return run_signs();
    if (name == "volumes") return run_volumes();
    if (name == "integrality") return run_integrality();
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const std::string& suite : verify_suite_names()) {
            auto part = verify_suite(suite);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("verify: unknown suite '" + std::string(name) + "'");
}

}  // namespace scvol
