#pragma once

#include <cmath>
#include <complex>

namespace seamlab {

// A nonzero complex number stored as (log|z|, arg z).  Everything the
// strip-scan layer does -- ratios across many orders of magnitude, argument
// tracking along boundary paths -- wants this form: the seam ratio divides a
// completed zeta value by a characteristic polynomial whose plain value
// overflows double range already for moderate cycle lengths.
struct LogComplex {
    double log_mag = 0.0; // natural log of the modulus; -inf encodes zero
    double arg = 0.0;     // one branch of the argument, not reduced

    static LogComplex from_value(std::complex<double> z) {
        return {std::log(std::abs(z)), std::arg(z)};
    }

    std::complex<double> value() const {
        return std::polar(std::exp(log_mag), arg);
    }

    LogComplex operator*(const LogComplex& o) const {
        return {log_mag + o.log_mag, arg + o.arg};
    }
    LogComplex operator/(const LogComplex& o) const {
        return {log_mag - o.log_mag, arg - o.arg};
    }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }
};

// Difference of two branch-free arguments reduced to (-pi, pi].  Used when
// walking a sampled path: each refined step is guaranteed below pi/2, so the
// principal difference is the true increment.
inline double principal_arg_diff(double a, double b) {
    double d = a - b;
    const double two_pi = 6.283185307179586476925286766559;
    d = std::remainder(d, two_pi);
    return d;
}

} // namespace seamlab
