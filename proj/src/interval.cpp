#include "wpb/interval.hpp"

#include <algorithm>

namespace wpb {

IntervalValue operator*(const IntervalValue& a, const IntervalValue& b) {
    // center product plus cross radii; exact and valid for signed centers.
    Rational r = rat_abs(a.center) * b.radius + rat_abs(b.center) * a.radius +
                 a.radius * b.radius;
    return {a.center * b.center, r};
}

IntervalValue operator/(const IntervalValue& a, const IntervalValue& b) {
    if (b.contains_zero())
        throw DomainError("interval division: denominator interval contains zero");
    // bounds of a/b from the four endpoint ratios
    Rational c1 = a.lo() / b.lo(), c2 = a.lo() / b.hi();
    Rational c3 = a.hi() / b.lo(), c4 = a.hi() / b.hi();
    Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return {(lo + hi) / 2, (hi - lo) / 2};
}

Rational IntervalValue::gap(const IntervalValue& o) const {
    if (overlaps(o)) return 0;
    if (hi() < o.lo()) return o.lo() - hi();
    return lo() - o.hi();
}

std::string IntervalValue::str() const {
    return "[" + rational_str(lo()) + ", " + rational_str(hi()) + "]";
}

} // namespace wpb
