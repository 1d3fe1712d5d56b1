#pragma once

#include "wpb/exact_scalar.hpp"

namespace wpb {

/// (x; base)_n = prod_{j=0}^{n-1} (1 - x*base^j), empty product for n=0.
ExactScalar poch_finite(const ExactScalar& x, const ExactScalar& base, long n);

/// (x; base)_{-n} for n >= 1, via the reciprocal identity
/// (x;base)_{-n} = (-1)^n base^{n(n+1)/2} / (x^n (base/x;base)_n)
///               = 1 / (x base^{-n}; base)_n.
/// Throws PoleError naming the vanishing factor when the denominator is zero.
ExactScalar poch_negative(const ExactScalar& x, const ExactScalar& base, long n);

/// (x; base)_n for any integer n.
ExactScalar poch_signed(const ExactScalar& x, const ExactScalar& base, long n);

} // namespace wpb
