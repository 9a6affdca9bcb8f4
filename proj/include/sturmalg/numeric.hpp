#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sturmalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }

/// Floor division for b > 0 (quotient rounded toward -inf).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// Largest s with s*s <= x (x >= 0).
inline Int isqrt(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

/// Sign of A + B*sqrt(d) for d > 0 and non-square. Exact, integer-only.
inline int surd_sign(const Int& a, const Int& b, const Int& d) {
    if (b == 0) return sign_of(a);
    if (a == 0) return sign_of(b);
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    const Int a2 = a * a;
    const Int b2d = b * b * d;
    if (a > 0) { // b < 0: positive iff a > |b|sqrt(d)
        if (a2 > b2d) return 1;
        if (a2 < b2d) return -1;
        return 0; // unreachable for non-square d
    }
    if (b2d > a2) return 1;
    if (b2d < a2) return -1;
    return 0;
}

/// floor((a + b*sqrt(d)) / r) with r > 0, d > 0 non-square.
inline Int floor_surd(const Int& a, const Int& b, const Int& d, const Int& r) {
    if (r <= 0) throw std::domain_error("floor_surd needs positive denominator");
    if (b == 0) return floor_div(a, r);
    const Int s = isqrt(b * b * d); // floor(|b|*sqrt(d))
    Int lo = (b > 0) ? a + s : a - s - 1;
    Int k = floor_div(lo, r);
    // x lies in [lo, lo+2); at most two corrections.
    while (surd_sign(a - (k + 1) * r, b, d) >= 0) ++k;
    return k;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Rat(num, den);
}

inline std::string rat_str(const Rat& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace sturmalg
