#pragma once

#include "wpb/exact_scalar.hpp"

namespace wpb {

/// Exact rational interval [center - radius, center + radius].
struct IntervalValue {
    Rational center = 0;
    Rational radius = 0;

    static IntervalValue exact(const Rational& v) { return {v, Rational(0)}; }

    Rational lo() const { return center - radius; }
    Rational hi() const { return center + radius; }
    Rational width() const { return 2 * radius; }
    bool contains_zero() const { return lo() <= 0 && hi() >= 0; }

    friend IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) {
        return {a.center + b.center, a.radius + b.radius};
    }
    friend IntervalValue operator-(const IntervalValue& a, const IntervalValue& b) {
        return {a.center - b.center, a.radius + b.radius};
    }
    friend IntervalValue operator-(const IntervalValue& a) { return {-a.center, a.radius}; }
    friend IntervalValue operator*(const IntervalValue& a, const IntervalValue& b);
    /// Throws DomainError when b contains zero.
    friend IntervalValue operator/(const IntervalValue& a, const IntervalValue& b);

    IntervalValue scaled(const Rational& v) const { return {center * v, radius * rat_abs(v)}; }

    bool overlaps(const IntervalValue& o) const { return lo() <= o.hi() && o.lo() <= hi(); }
    /// Distance between the intervals when disjoint, 0 otherwise.
    Rational gap(const IntervalValue& o) const;

    std::string str() const;
};

} // namespace wpb
