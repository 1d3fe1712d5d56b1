#include "wpb/qpoch.hpp"

namespace wpb {

ExactScalar poch_finite(const ExactScalar& x, const ExactScalar& base, long n) {
    ExactScalar acc = ExactScalar::one();
    ExactScalar p = x;
    for (long j = 0; j < n; ++j) {
        acc *= ExactScalar::one() - p;
        p *= base;
    }
    return acc;
}

ExactScalar poch_negative(const ExactScalar& x, const ExactScalar& base, long n) {
    if (x.is_zero())
        throw PoleError("(x;base)_{-n}: x^n denominator vanishes (x = 0)");
    ExactScalar den = poch_finite(x * base.pow(-n), base, n);
    if (den.is_zero())
        throw PoleError("(x;base)_{-n}: factor of (x*base^{-n};base)_n vanishes, x=" +
                        x.str() + " base=" + base.str());
    return ExactScalar::one() / den;
}

ExactScalar poch_signed(const ExactScalar& x, const ExactScalar& base, long n) {
    return n >= 0 ? poch_finite(x, base, n) : poch_negative(x, base, -n);
}

} // namespace wpb
