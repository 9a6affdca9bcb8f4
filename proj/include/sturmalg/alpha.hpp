#pragma once

#include "sturmalg/numeric.hpp"

#include <string>

namespace sturmalg {

/// Exact slope value in [0,1]: either a rational p/q or a quadratic surd
/// (p + q*sqrt(d))/r with d square-free. All comparisons and floors are
/// decided by integer arithmetic only.
class Alpha {
public:
    static Alpha from_rational(const Int& num, const Int& den);
    static Alpha from_rational(const Rat& value);

    /// (p + q*sqrt(d))/r. Throws if q = 0, r = 0, d <= 0 or d a perfect
    /// square, or the value falls outside [0,1]. d is reduced square-free,
    /// gcd(p,q,r) = 1, r > 0.
    static Alpha from_surd(Int p, Int q, Int d, Int r);

    bool is_rational() const { return rational_; }
    const Rat& rational_value() const;
    const Int& surd_p() const { return p_; }
    const Int& surd_q() const { return q_; }
    const Int& surd_d() const { return d_; }
    const Int& surd_r() const { return r_; }

    /// Sign of (value - x).
    int compare(const Rat& x) const;

    /// floor(value*n + rho), exact.
    Int floor_scaled(const Int& n, const Rat& rho) const;

    std::string str() const;

    bool operator==(const Alpha& o) const;
    bool operator!=(const Alpha& o) const { return !(*this == o); }

private:
    Alpha() = default;

    bool rational_ = true;
    Rat ratval_;
    Int p_, q_, d_, r_;
};

} // namespace sturmalg
