#pragma once

#include <functional>
#include <vector>

#include "wpb/exact_scalar.hpp"

namespace wpb {

/// What the formal variable t stands for, per identity declaration.
enum class SeriesBase { Q, SqrtQ };

/// Formal power series in t truncated at a fixed order, exact coefficients.
/// Arithmetic results carry the minimum of the operand orders.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(long order, SeriesBase base)
        : order_(order), base_(base), c_(static_cast<std::size_t>(order) + 1) {}

    static TruncatedSeries one(long order, SeriesBase base) {
        TruncatedSeries f(order, base);
        f.c_[0] = ExactScalar::one();
        return f;
    }
    static TruncatedSeries constant(const ExactScalar& v, long order, SeriesBase base) {
        TruncatedSeries f(order, base);
        f.c_[0] = v;
        return f;
    }
    /// coeff * t^v; v > order yields the zero series.
    static TruncatedSeries monomial(const ExactScalar& coeff, long v, long order,
                                    SeriesBase base);

    long order() const { return order_; }
    SeriesBase base() const { return base_; }
    const ExactScalar& coeff(long i) const { return c_[static_cast<std::size_t>(i)]; }
    ExactScalar& coeff(long i) { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;

    TruncatedSeries truncated(long new_order) const;
    /// Multiply by t^v (v >= 0): coefficients shift up, same order.
    TruncatedSeries shifted(long v) const;
    TruncatedSeries scaled(const ExactScalar& v) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Multiplicative inverse to the carried order; coeff(0) must be nonzero.
    TruncatedSeries inverse() const;

    std::string str(const std::string& var = "t") const;

private:
    long order_ = 0;
    SeriesBase base_ = SeriesBase::Q;
    std::vector<ExactScalar> c_{ExactScalar::zero()};
};

/// Expansion of prod_{j>=0} (1 - coeff * t^(val + step*j)) to the given order.
/// Requires val >= 1 unless coeff is zero (zero-valuation arguments belong to
/// the interval backend); factors beyond the order are identity.
TruncatedSeries poch_infinite_series(const ExactScalar& coeff, long val, long step,
                                     long order, SeriesBase base);

/// Finite product prod_{j=0}^{n-1} (1 - coeff * t^(val + step*j)) as a series;
/// val may be zero here (the j=0 factor is the scalar 1-coeff).
TruncatedSeries poch_finite_series(const ExactScalar& coeff, long val, long step, long n,
                                   long order, SeriesBase base);

/// Sum of term_gen(n) over n with valuation_bound(n) <= order, where
/// valuation_bound is a proven lower bound on the t-valuation of term n that
/// tends to infinity.  Throws DomainError when the bound has not exceeded the
/// order by n_cap.
TruncatedSeries sum_terms_by_valuation(
    const std::function<TruncatedSeries(long)>& term_gen,
    const std::function<long(long)>& valuation_bound, long order, SeriesBase base,
    long n_cap = 10000);

} // namespace wpb
