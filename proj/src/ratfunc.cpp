#include "qsl2/ratfunc.hpp"

namespace qsl2 {

void RatFunc::normalize() {
    if (den_.isZero()) throw std::domain_error("ratfunc: zero denominator");
    if (num_.isZero()) { den_ = LaurentInt(1); return; }
    LaurentInt g = laurentGcd(num_, den_);
    if (!g.isOne()) {
        num_ = *divExact(num_, g);
        den_ = *divExact(den_, g);
    }
    renormalizeUnit();
}

void RatFunc::renormalizeUnit() {
    if (den_.isZero()) throw std::domain_error("ratfunc: zero denominator");
    long sh = den_.lowExp();
    bool neg = den_.leadCoeff() < 0;
    if (sh != 0 || neg) {
        den_ = den_.shifted(-sh);
        num_ = num_.shifted(-sh);
        if (neg) { den_ = -den_; num_ = -num_; }
    }
}

std::pair<RatFunc, RatFunc> RatFunc::evenOddSplit() const {
    LaurentInt n = num_, d = den_;
    if (!d.evenSupport()) {
        // den(v)*den(-v) has even support
        LaurentInt dneg = d.substNegated();
        n *= dneg;
        d *= dneg;
    }
    LaurentInt ev, od;
    for (auto& [e, c] : n.coeffs()) (e % 2 == 0 ? ev : od).set(e, c);
    return {RatFunc(ev, d), RatFunc(od, d)};
}

std::string RatFunc::str() const {
    if (den_.isOne()) return num_.str();
    return "(" + num_.str() + ")*(" + den_.str() + ")^-1";
}

}  // namespace qsl2
