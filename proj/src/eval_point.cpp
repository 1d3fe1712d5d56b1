#include "wpb/eval_point.hpp"

#include <sstream>

namespace wpb {

bool EvalPoint::resolvable(const std::string& name) const {
    if (vals_.count(name)) return true;
    if (name == "q") return vals_.count("s") != 0;
    return vals_.count("r" + name) != 0;
}

ExactScalar EvalPoint::resolve(const std::string& name) const {
    auto it = vals_.find(name);
    if (it != vals_.end()) return it->second;
    if (name == "q") {
        auto s = vals_.find("s");
        if (s != vals_.end()) return s->second * s->second;
    } else {
        auto r = vals_.find("r" + name);
        if (r != vals_.end()) return r->second * r->second;
    }
    throw DomainError("unknown symbol '" + name + "' at evaluation point");
}

EvalPoint EvalPoint::swapped(const std::string& x, const std::string& y) const {
    EvalPoint out = *this;
    auto swap_names = [&out, this](const std::string& a, const std::string& b) {
        auto ia = vals_.find(a), ib = vals_.find(b);
        bool ha = ia != vals_.end(), hb = ib != vals_.end();
        if (ha && hb) {
            out.vals_[a] = ib->second;
            out.vals_[b] = ia->second;
        } else if (ha) {
            out.vals_.erase(a);
            out.vals_[b] = ia->second;
        } else if (hb) {
            out.vals_.erase(b);
            out.vals_[a] = ib->second;
        }
    };
    swap_names(x, y);
    swap_names("r" + x, "r" + y);
    return out;
}

std::string EvalPoint::fingerprint() const {
    std::ostringstream os;
    for (const auto& [k, v] : vals_) os << k << '=' << v.str() << ';';
    return os.str();
}

ExactScalar Mono::eval(const EvalPoint& p, long N) const {
    ExactScalar acc = coeff;
    for (const auto& [name, e] : pows) {
        long ex = e.at(N);
        if (ex == 0) continue;
        acc *= p.resolve(name).pow(ex);
    }
    return acc;
}

std::pair<ExactScalar, long> Mono::eval_partial(const EvalPoint& p, long N,
                                                const std::string& t_sym) const {
    ExactScalar acc = coeff;
    long t_exp = 0;
    for (const auto& [name, e] : pows) {
        long ex = e.at(N);
        if (ex == 0) continue;
        if (name == t_sym) {
            t_exp += ex;
        } else {
            acc *= p.resolve(name).pow(ex);
        }
    }
    return {acc, t_exp};
}

std::string Mono::str() const {
    std::ostringstream os;
    bool first = true;
    if (!coeff.is_one() || pows.empty()) {
        os << coeff.str();
        first = false;
    }
    for (const auto& [name, e] : pows) {
        if (!first) os << '*';
        first = false;
        os << name;
        if (!(e.c0 == 1 && e.cn == 0)) {
            os << '^';
            if (e.cn == 0) {
                os << e.c0;
            } else {
                os << '(' << e.c0 << (e.cn > 0 ? "+" : "") << e.cn << "N)";
            }
        }
    }
    return os.str();
}

Mono operator*(Mono a, const Mono& b) {
    a.coeff *= b.coeff;
    for (const auto& [name, e] : b.pows) {
        auto& slot = a.pows[name];
        slot = slot + e;
        if (slot.c0 == 0 && slot.cn == 0) a.pows.erase(name);
    }
    return a;
}

Mono operator/(Mono a, const Mono& b) {
    a.coeff /= b.coeff;
    for (const auto& [name, e] : b.pows) {
        auto& slot = a.pows[name];
        slot = slot - e;
        if (slot.c0 == 0 && slot.cn == 0) a.pows.erase(name);
    }
    return a;
}

Mono sym(const std::string& name, long e, long eN) {
    Mono m;
    m.pows[name] = {e, eN};
    return m;
}

Mono qpow(long c0, long cN) { return spow(2 * c0, 2 * cN); }

Mono spow(long c0, long cN) {
    Mono m;
    if (c0 != 0 || cN != 0) m.pows["s"] = {c0, cN};
    return m;
}

Mono cst(ExactScalar v) {
    Mono m;
    m.coeff = std::move(v);
    return m;
}

Mono cst(long v) { return cst(ExactScalar(v)); }

} // namespace wpb
