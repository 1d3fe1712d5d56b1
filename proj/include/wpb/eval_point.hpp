#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wpb/exact_scalar.hpp"

namespace wpb {

/// Exponent affine in an outer integer (the structural N of a finite identity,
/// or a term index, depending on where it is used): value = c0 + cn * idx.
struct AffInt {
    long c0 = 0;
    long cn = 0;
    long at(long idx) const { return c0 + cn * idx; }
    friend AffInt operator+(AffInt a, AffInt b) { return {a.c0 + b.c0, a.cn + b.cn}; }
    friend AffInt operator-(AffInt a, AffInt b) { return {a.c0 - b.c0, a.cn - b.cn}; }
    friend bool operator==(AffInt a, AffInt b) { return a.c0 == b.c0 && a.cn == b.cn; }
};

/// Evaluation point: a finite map from sampled symbols to exact scalars.
///
/// Symbols live at square-root level where an identity needs half-integer
/// powers: `s` is q^{1/2} and `rx` is x^{1/2} for any symbol x.  Derived
/// symbols are computed views: resolve("q") = s^2 and resolve("x") falls back
/// to resolve("rx")^2 when x itself was not sampled.
class EvalPoint {
public:
    void set(const std::string& name, ExactScalar v) { vals_[name] = std::move(v); }
    bool has(const std::string& name) const { return vals_.count(name) != 0; }

    /// True when the symbol is either stored or derivable from a stored root.
    bool resolvable(const std::string& name) const;

    ExactScalar resolve(const std::string& name) const;

    /// Point with the roles of two symbols interchanged (both the plain
    /// entries and their root-level entries), e.g. swapped("a","k") for duals.
    EvalPoint swapped(const std::string& x, const std::string& y) const;

    /// Canonical serialization, usable as a memo key.
    std::string fingerprint() const;

    const std::map<std::string, ExactScalar>& entries() const { return vals_; }

private:
    std::map<std::string, ExactScalar> vals_;
};

/// Monomial in point symbols: coeff * prod sym^(exponent affine in N).
/// This is the expression language for every parameter, base, argument and
/// closed-form factor in the library; sums of symbols are handled by defining
/// a computed symbol on the point instead.
struct Mono {
    ExactScalar coeff = ExactScalar::one();
    std::map<std::string, AffInt> pows;

    ExactScalar eval(const EvalPoint& p, long N = 0) const;

    /// Partial evaluation for series work: every symbol except `t_sym` is
    /// resolved; the t-exponent (at the given N) is returned separately.
    std::pair<ExactScalar, long> eval_partial(const EvalPoint& p, long N,
                                              const std::string& t_sym = "s") const;

    bool is_constant() const { return pows.empty(); }
    std::string str() const;

    friend Mono operator*(Mono a, const Mono& b);
    friend Mono operator/(Mono a, const Mono& b);
    friend Mono operator-(Mono m) { m.coeff = -m.coeff; return m; }
};

/// Symbol to an affine power: sym(name) = name^1, sym(name, e) = name^e,
/// sym(name, e, eN) = name^(e + eN*N).
Mono sym(const std::string& name, long e = 1, long eN = 0);

/// q^(c0 + cN*N) expressed through the fundamental symbol s = q^{1/2}.
Mono qpow(long c0 = 1, long cN = 0);

/// q^((c0 + cN*N)/2) = s^(c0 + cN*N).
Mono spow(long c0, long cN = 0);

/// Constant monomial.
Mono cst(ExactScalar v);
Mono cst(long v);

} // namespace wpb
