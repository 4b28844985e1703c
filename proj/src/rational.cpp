#include "scvol/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace scvol {

void Rational::canonicalize() {
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw std::domain_error("Rational: zero denominator");
    canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
    mpq_t q;
    mpq_init(q);
    mpq_set_d(q, x);  // exact; result is canonical with power-of-two denominator
    Rational r;
    r.num_ = mpz_class(mpq_numref(q));
    r.den_ = mpz_class(mpq_denref(q));
    mpq_clear(q);
    return r;
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    auto parse_int = [](std::string_view t) {
        if (t.empty()) throw std::domain_error("Rational: malformed literal");
        Int v;
        if (mpz_set_str(v.get_mpz_t(), std::string(t).c_str(), 10) != 0)
            throw std::domain_error("Rational: malformed literal");
        return v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

double Rational::to_double() const {
    mpq_t q;
    mpq_init(q);
    mpq_set_num(q, num_.get_mpz_t());
    mpq_set_den(q, den_.get_mpz_t());
    double d = mpq_get_d(q);
    mpq_clear(q);
    return d;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::fraction_str() const {
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    if (sgn(num_) < 0) {
        r.num_ = -den_;
        r.den_ = -num_;
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first; the product of the reduced parts is already canonical.
    Int g1, g2;
    mpz_gcd(g1.get_mpz_t(), a.num_.get_mpz_t(), b.den_.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), b.num_.get_mpz_t(), a.den_.get_mpz_t());
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    if (sgn(r.num_) == 0) r.den_ = 1;
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * b.inverse();
}

int Rational::cmp(const Rational& a, const Rational& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    return ::cmp(lhs, rhs);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    if (invert && r.is_zero()) throw std::domain_error("Rational: negative power of zero");
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), k);
    return invert ? Rational(std::move(d), std::move(n)) : Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace scvol
