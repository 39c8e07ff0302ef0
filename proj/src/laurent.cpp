#include "qsl2/laurent.hpp"

#include <sstream>

namespace qsl2 {

LaurentInt LaurentInt::inflated(long k) const {
    if (k == 0) throw std::domain_error("laurent: inflate by 0");
    LaurentInt r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
    return r;
}

LaurentInt LaurentInt::deflated(long k) const {
    if (k == 0) throw std::domain_error("laurent: deflate by 0");
    LaurentInt r;
    for (auto& [e, c] : coeffs_) {
        if (e % k != 0) throw std::domain_error("laurent: exponent not on grid");
        r.coeffs_[e / k] = c;
    }
    return r;
}

LaurentInt LaurentInt::pow(long n) const {
    if (n < 0) throw std::domain_error("laurent: negative power");
    LaurentInt r(1);
    LaurentInt base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Int LaurentInt::content() const {
    Int g = 0;
    for (auto& [e, c] : coeffs_) {
        (void)e;
        g = intGcd(g, c);
        if (g == 1) break;
    }
    return g;
}

std::optional<LaurentInt> divExact(const LaurentInt& x, const LaurentInt& y) {
    if (y.isZero()) throw std::domain_error("divExact: division by zero");
    if (x.isZero()) return LaurentInt();
    LaurentInt r = x;
    LaurentInt q;
    const long dy = y.highExp();
    const long spreadY = dy - y.lowExp();
    const Int& ly = y.leadCoeff();
    // Leading terms cancel exactly each step, so highExp strictly decreases
    // and the spread check below guarantees termination.
    while (!r.isZero()) {
        if (r.highExp() - r.lowExp() < spreadY) return std::nullopt;
        Int c = r.leadCoeff();
        if (c % ly != 0) return std::nullopt;
        Int qc = c / ly;
        long qe = r.highExp() - dy;
        q.add(qe, qc);
        r -= y * LaurentInt::monomial(qc, qe);
    }
    return q;
}

namespace {

// primitive part with lowest exponent 0 and positive leading coefficient
LaurentInt primitive(const LaurentInt& a) {
    if (a.isZero()) return a;
    Int c = a.content();
    if (a.leadCoeff() < 0) c = -c;
    LaurentInt r;
    for (auto& [e, k] : a.coeffs()) r.set(e - a.lowExp(), k / c);
    return r;
}

}  // namespace

LaurentInt laurentGcd(const LaurentInt& a, const LaurentInt& b) {
    if (a.isZero()) return b.isZero() ? LaurentInt() : primitive(b) * LaurentInt(b.content());
    if (b.isZero()) return primitive(a) * LaurentInt(a.content());
    Int cg = intGcd(a.content(), b.content());
    LaurentInt f = primitive(a), g = primitive(b);
    // primitive Euclid with pseudo-division; desk-scale degrees keep this cheap
    while (!g.isZero()) {
        LaurentInt r = f;
        long dg = g.highExp();
        const Int& lg = g.leadCoeff();
        while (!r.isZero() && r.highExp() >= dg) {
            Int lr = r.leadCoeff();
            long sh = r.highExp() - dg;
            Int m = intGcd(lr, lg);
            // scale r by lg/m, subtract (lr/m) v^sh g
            LaurentInt scaled;
            Int fac = lg / m;
            for (auto& [e, c] : r.coeffs()) scaled.set(e, c * fac);
            r = scaled - g.shifted(sh) * LaurentInt(lr / m);
        }
        f = g;
        g = primitive(r);
    }
    return primitive(f) * LaurentInt(cg);
}

std::string LaurentInt::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace qsl2
