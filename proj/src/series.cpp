#include "wpb/series.hpp"

#include <algorithm>
#include <sstream>

namespace wpb {

namespace {

void require_same_base(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.base() != b.base())
        throw DomainError("series base mismatch (t=q vs t=q^{1/2})");
}

} // namespace

TruncatedSeries TruncatedSeries::monomial(const ExactScalar& coeff, long v, long order,
                                          SeriesBase base) {
    TruncatedSeries f(order, base);
    if (v < 0) throw DomainError("series monomial with negative t-power");
    if (v <= order) f.coeff(v) = coeff;
    return f;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const ExactScalar& v) { return v.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    TruncatedSeries f(std::min(new_order, order_), base_);
    for (long i = 0; i <= f.order_; ++i) f.c_[i] = c_[i];
    return f;
}

TruncatedSeries TruncatedSeries::shifted(long v) const {
    if (v < 0) throw DomainError("negative series shift");
    TruncatedSeries f(order_, base_);
    for (long i = 0; i + v <= order_; ++i) f.c_[i + v] = c_[i];
    return f;
}

TruncatedSeries TruncatedSeries::scaled(const ExactScalar& v) const {
    TruncatedSeries f = *this;
    for (auto& x : f.c_) x *= v;
    return f;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_base(a, b);
    TruncatedSeries f(std::min(a.order_, b.order_), a.base_);
    for (long i = 0; i <= f.order_; ++i) f.c_[i] = a.c_[i] + b.c_[i];
    return f;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_base(a, b);
    TruncatedSeries f(std::min(a.order_, b.order_), a.base_);
    for (long i = 0; i <= f.order_; ++i) f.c_[i] = a.c_[i] - b.c_[i];
    return f;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries f = a;
    for (auto& x : f.c_) x = -x;
    return f;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_base(a, b);
    TruncatedSeries f(std::min(a.order_, b.order_), a.base_);
    for (long i = 0; i <= f.order_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (long j = 0; i + j <= f.order_; ++j) {
            if (b.c_[j].is_zero()) continue;
            f.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return f;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.base_ != b.base_ || a.order_ != b.order_) return false;
    return a.c_ == b.c_;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero())
        throw DomainError("series inverse: zero constant term");
    TruncatedSeries g(order_, base_);
    ExactScalar inv0 = ExactScalar::one() / c_[0];
    g.c_[0] = inv0;
    for (long n = 1; n <= order_; ++n) {
        ExactScalar s;
        for (long i = 1; i <= n; ++i) {
            if (c_[i].is_zero()) continue;
            s += c_[i] * g.c_[n - i];
        }
        g.c_[n] = -s * inv0;
    }
    return g;
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        if (i > 0) os << "*" << var << "^" << i;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order_ + 1 << ")";
    return os.str();
}

TruncatedSeries poch_infinite_series(const ExactScalar& coeff, long val, long step,
                                     long order, SeriesBase base) {
    if (coeff.is_zero()) return TruncatedSeries::one(order, base);
    if (val < 1)
        throw DomainError("poch_infinite_series: argument has zero t-valuation; "
                          "use the interval backend");
    if (step < 1) throw DomainError("poch_infinite_series: step must be positive");
    TruncatedSeries f = TruncatedSeries::one(order, base);
    for (long w = val; w <= order; w += step) {
        // sparse factor (1 - coeff t^w)
        TruncatedSeries g(order, base);
        for (long i = 0; i <= order; ++i) {
            if (f.coeff(i).is_zero()) continue;
            g.coeff(i) += f.coeff(i);
            if (i + w <= order) g.coeff(i + w) -= f.coeff(i) * coeff;
        }
        f = g;
    }
    return f;
}

TruncatedSeries poch_finite_series(const ExactScalar& coeff, long val, long step, long n,
                                   long order, SeriesBase base) {
    if (val < 0) throw DomainError("poch_finite_series: negative valuation");
    TruncatedSeries f = TruncatedSeries::one(order, base);
    for (long j = 0; j < n; ++j) {
        long w = val + step * j;
        if (w > order) break;
        TruncatedSeries g(order, base);
        for (long i = 0; i <= order; ++i) {
            if (f.coeff(i).is_zero()) continue;
            g.coeff(i) += f.coeff(i);
            if (i + w <= order) g.coeff(i + w) -= f.coeff(i) * coeff;
        }
        f = g;
    }
    return f;
}

TruncatedSeries sum_terms_by_valuation(
    const std::function<TruncatedSeries(long)>& term_gen,
    const std::function<long(long)>& valuation_bound, long order, SeriesBase base,
    long n_cap) {
    TruncatedSeries acc(order, base);
    long prev = valuation_bound(0);
    for (long n = 0; n <= n_cap; ++n) {
        long vb = valuation_bound(n);
        if (vb > order && vb >= prev && n > 0) return acc;
        if (vb <= order) acc = acc + term_gen(n).truncated(order);
        prev = vb;
    }
    throw DomainError("sum_terms_by_valuation: valuation bound did not pass the order "
                      "within the n-cap; identity must use the interval backend");
}

} // namespace wpb
