#include "sturmalg/alpha.hpp"

#include <boost/multiprecision/integer.hpp>

namespace sturmalg {

namespace {

Int gcd3(const Int& a, const Int& b, const Int& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(a, b), c);
}

/// Pulls the largest square factor out of d: returns (f, d') with d = f^2 d'.
std::pair<Int, Int> extract_square(Int d) {
    Int f = 1;
    for (Int p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            f *= p;
        }
    }
    return {f, d};
}

void check_unit_interval(int sign_vs_zero, int sign_vs_one) {
    if (sign_vs_zero < 0 || sign_vs_one > 0)
        throw std::domain_error("slope value outside [0,1]");
}

} // namespace

Alpha Alpha::from_rational(const Int& num, const Int& den) {
    return from_rational(make_rat(num, den));
}

Alpha Alpha::from_rational(const Rat& value) {
    if (value < 0 || value > 1) throw std::domain_error("slope value outside [0,1]");
    Alpha a;
    a.rational_ = true;
    a.ratval_ = value;
    return a;
}

Alpha Alpha::from_surd(Int p, Int q, Int d, Int r) {
    if (q == 0) throw std::domain_error("surd coefficient q must be nonzero");
    if (r == 0) throw std::domain_error("surd denominator r must be nonzero");
    if (d <= 0) throw std::domain_error("radicand d must be positive");
    auto [f, dred] = extract_square(d);
    if (dred == 1) throw std::domain_error("radicand d is a perfect square");
    q *= f;
    d = dred;
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    const Int g = gcd3(abs(p), abs(q), r);
    p /= g;
    q /= g;
    r /= g;

    Alpha a;
    a.rational_ = false;
    a.p_ = p;
    a.q_ = q;
    a.d_ = d;
    a.r_ = r;
    check_unit_interval(a.compare(Rat(0)), a.compare(Rat(1)));
    return a;
}

const Rat& Alpha::rational_value() const {
    if (!rational_) throw std::logic_error("rational_value on a surd");
    return ratval_;
}

int Alpha::compare(const Rat& x) const {
    if (rational_) {
        if (ratval_ < x) return -1;
        if (ratval_ > x) return 1;
        return 0;
    }
    const Int xn = boost::multiprecision::numerator(x);
    const Int xd = boost::multiprecision::denominator(x);
    // (p + q sqrt(d))/r - xn/xd, with r, xd > 0
    return surd_sign(p_ * xd - xn * r_, q_ * xd, d_);
}

Int Alpha::floor_scaled(const Int& n, const Rat& rho) const {
    const Int rn = boost::multiprecision::numerator(rho);
    const Int rd = boost::multiprecision::denominator(rho);
    if (rational_) {
        const Int an = boost::multiprecision::numerator(ratval_);
        const Int ad = boost::multiprecision::denominator(ratval_);
        return floor_div(an * n * rd + rn * ad, ad * rd);
    }
    // (p n rd + rn r + q n rd sqrt(d)) / (r rd)
    return floor_surd(p_ * n * rd + rn * r_, q_ * n * rd, d_, r_ * rd);
}

std::string Alpha::str() const {
    if (rational_) return rat_str(ratval_);
    const bool neg = q_ < 0;
    const Int qa = abs(q_);
    return "(" + p_.str() + (neg ? "-" : "+") + qa.str() + "*sqrt(" + d_.str() + "))/" +
           r_.str();
}

bool Alpha::operator==(const Alpha& o) const {
    if (rational_ != o.rational_) return false;
    if (rational_) return ratval_ == o.ratval_;
    return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
}

} // namespace sturmalg
