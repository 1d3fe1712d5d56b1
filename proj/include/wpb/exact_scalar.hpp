#pragma once

#include <gmpxx.h>

#include <string>

#include "wpb/errors.hpp"

namespace wpb {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Gaussian rational: re + im*i with exact rational parts.  The coefficient
/// field of every exact evaluation in this library.  Arithmetic never rounds;
/// division by zero throws DivisionByZero.
class ExactScalar {
public:
    ExactScalar() : re_(0), im_(0) {}
    ExactScalar(long v) : re_(v), im_(0) {}      // NOLINT(google-explicit-constructor)
    ExactScalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
    ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar zero() { return ExactScalar(); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re_, -a.im_}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
        if (norm == 0) throw DivisionByZero();
        return {(a.re_ * b.re_ + a.im_ * b.im_) / norm,
                (a.im_ * b.re_ - a.re_ * b.im_) / norm};
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    ExactScalar conj() const { return {re_, -im_}; }

    /// |z|^2 as an exact rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    /// Integer power; negative exponents require a nonzero value.
    ExactScalar pow(long e) const;

    std::string str() const;

private:
    Rational re_, im_;
};

std::string rational_str(const Rational& r);

/// |r| for exact rationals.
inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace wpb
