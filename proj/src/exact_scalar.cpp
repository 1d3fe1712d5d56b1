#include "wpb/exact_scalar.hpp"

namespace wpb {

ExactScalar ExactScalar::pow(long e) const {
    if (e == 0) return one();
    ExactScalar base = *this;
    if (e < 0) {
        base = one() / base;   // throws on zero
        e = -e;
    }
    ExactScalar acc = one();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

std::string ExactScalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string s;
    if (re_ != 0) s += rational_str(re_);
    if (im_ > 0 && re_ != 0) s += "+";
    if (im_ == -1) s += "-";
    else if (im_ != 1) s += rational_str(im_);
    s += "i";
    return s;
}

} // namespace wpb
