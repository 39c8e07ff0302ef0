#ifndef QSL2_TORUS_HPP
#define QSL2_TORUS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qsl2/qsymbols.hpp"

namespace qsl2 {

// Elements of the commutative subalgebra A[K,K^-1], stored as K-exponent ->
// coefficient. All {H+m}-symbols are expanded eagerly into K-polynomials.
class TorusElement {
public:
    using Map = std::map<long, RatFunc>;

    TorusElement() = default;
    TorusElement(const RatFunc& scalar) { if (!scalar.isZero()) coeffs_[0] = scalar; }
    TorusElement(long n) : TorusElement(RatFunc(n)) {}

    static TorusElement kPower(long p, const RatFunc& c = RatFunc(1)) {
        TorusElement r;
        if (!c.isZero()) r.coeffs_[p] = c;
        return r;
    }

    bool isZero() const { return coeffs_.empty(); }
    bool isScalar() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
    const Map& coeffs() const { return coeffs_; }
    RatFunc coeff(long p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? RatFunc() : it->second;
    }
    long lowK() const { return coeffs_.begin()->first; }
    long highK() const { return coeffs_.rbegin()->first; }

    void add(long p, const RatFunc& c) {
        if (c.isZero()) return;
        auto [it, inserted] = coeffs_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) coeffs_.erase(it);
        }
    }

    TorusElement operator-() const {
        TorusElement r;
        for (auto& [p, c] : coeffs_) r.coeffs_[p] = -c;
        return r;
    }
    TorusElement& operator+=(const TorusElement& o) {
        for (auto& [p, c] : o.coeffs_) add(p, c);
        return *this;
    }
    TorusElement& operator-=(const TorusElement& o) {
        for (auto& [p, c] : o.coeffs_) add(p, -c);
        return *this;
    }
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { a += b; return a; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { a -= b; return a; }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
        TorusElement r;
        for (auto& [pa, ca] : a.coeffs_)
            for (auto& [pb, cb] : b.coeffs_)
                r.add(pa + pb, ca * cb);
        return r;
    }
    TorusElement& operator*=(const TorusElement& o) { *this = *this * o; return *this; }
    friend TorusElement operator*(const RatFunc& c, const TorusElement& t) {
        TorusElement r;
        for (auto& [p, x] : t.coeffs_) r.add(p, c * x);
        return r;
    }

    friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

    bool isIntegral() const {
        for (auto& [p, c] : coeffs_) { (void)p; if (!c.isIntegral()) return false; }
        return true;
    }

    TorusElement pow(long n) const {
        if (n < 0) throw std::domain_error("torus: negative power");
        TorusElement r(1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }
    // v-exponents of all coefficients multiplied by k (K-exponents untouched)
    TorusElement inflated(long k) const {
        TorusElement r;
        for (auto& [p, c] : coeffs_) r.coeffs_[p] = c.inflated(k);
        return r;
    }
    TorusElement deflated(long k) const {
        TorusElement r;
        for (auto& [p, c] : coeffs_) r.coeffs_[p] = c.deflated(k);
        return r;
    }

private:
    Map coeffs_;
};

// {H+j} = v^j K - v^-j K^-1
TorusElement braceH(long j);
// BB(H+m;n) = {H+m}{H+m-1}...{H+m-n+1}
TorusElement makeBraceH(long m, long n);
// BBB(H;l) = (K^2-1)(K^2-q)...(K^2-q^{l-1})
TorusElement makeBBB(long l);

// algebra automorphism K -> v^j K
TorusElement gammaShift(long j, const TorusElement& t);
// involutive automorphism K -> v^-2 K^-1
TorusElement wInvolution(const TorusElement& t);
// ring homomorphism K := v^j
RatFunc evalK(long j, const TorusElement& t);

// coefficient pair (a, b) standing for a + b*K
using LinearCoeff = std::pair<RatFunc, RatFunc>;

struct BBBExpansion {
    // t = sum_j (coeffs[j].first + coeffs[j].second K) BBB(H;j) + remainder BBB(H;steps)
    std::vector<LinearCoeff> coeffs;
    TorusElement remainder;
};

// first `steps` coefficients of the BBB(H;j)-basis expansion
BBBExpansion expandBBBPrefix(const TorusElement& t, long steps);
// full finite expansion; nullopt when none exists within the step cap
std::optional<std::vector<LinearCoeff>> expandBBB(const TorusElement& t, long maxSteps = 256);
// unique finite expansion t = sum_j (a_j + b_j K) {H}^j (always finite)
std::vector<LinearCoeff> expandHPow(const TorusElement& t);

TorusElement assembleBBB(const std::vector<LinearCoeff>& coeffs);
TorusElement assembleHPow(const std::vector<LinearCoeff>& coeffs);

// exact division by BB(H;n); nullopt when not in the principal ideal
std::optional<TorusElement> divideByBraceH(const TorusElement& t, long n);

// Values of the form v^{h/2} * (element of A[K,K^-1]): `doubled` carries
// coefficients on the doubled v-exponent grid (exponent 2 means v).
struct HalfGridTorus {
    TorusElement doubled;

    bool onIntegerGrid() const {
        for (auto& [p, c] : doubled.coeffs()) {
            (void)p;
            if (!c.num().evenSupport() || !c.den().evenSupport()) return false;
        }
        return true;
    }
    TorusElement toTorus() const {
        if (!onIntegerGrid()) throw std::domain_error("half-grid value has genuine half powers");
        return doubled.deflated(2);
    }
    friend bool operator==(const HalfGridTorus& a, const HalfGridTorus& b) {
        return a.doubled == b.doubled;
    }
};

// a and b are either plain integers or H + offset
struct HSpec {
    bool hasH = false;
    long offset = 0;
    static HSpec integer(long m) { return {false, m}; }
    static HSpec hPlus(long m) { return {true, m}; }
};

// kappa(a,r; b,s; c) computed from the single-sum expansion over BB(a+jc;r);
// lives in v^{crs/2} A[K,K^-1], hence the half-grid wrapper.
HalfGridTorus kappa(HSpec a, long r, HSpec b, long s, long c);
// the same value from the double-sum expansion (cross-check)
HalfGridTorus kappaDoubleSum(HSpec a, long r, HSpec b, long s, long c);

}  // namespace qsl2

#endif
