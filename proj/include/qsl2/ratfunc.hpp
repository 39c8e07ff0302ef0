#ifndef QSL2_RATFUNC_HPP
#define QSL2_RATFUNC_HPP

#include <string>

#include "qsl2/laurent.hpp"

namespace qsl2 {

// Normalized fractions of integer Laurent polynomials. The denominator is
// nonzero, shares no non-unit factor with the numerator, has lowest
// v-exponent 0 and positive leading integer coefficient. With that unit
// convention normal forms are unique, so operator== decides equality of
// values, and a value lies in Z[v,v^-1] exactly when the denominator is 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    RatFunc(const LaurentInt& n) : num_(n), den_(1) {}
    RatFunc(const LaurentInt& n, const LaurentInt& d) : num_(n), den_(d) { normalize(); }

    static RatFunc inverseOf(const LaurentInt& d) { return RatFunc(LaurentInt(1), d); }

    const LaurentInt& num() const { return num_; }
    const LaurentInt& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isIntegral() const { return den_.isOne(); }
    // value as element of Z[v,v^-1]; throws when not integral
    const LaurentInt& asLaurent() const {
        if (!isIntegral()) throw std::domain_error("ratfunc: not in Z[v,v^-1]: " + str());
        return num_;
    }

    RatFunc operator-() const { RatFunc r; r.num_ = -num_; r.den_ = den_; return r; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.den_.isOne() && b.den_.isOne()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.isZero()) throw std::domain_error("ratfunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    RatFunc pow(long n) const {
        if (n >= 0) {
            RatFunc r(1), base = *this;
            while (n > 0) {
                if (n & 1) r *= base;
                base *= base;
                n >>= 1;
            }
            return r;
        }
        return RatFunc(den_, num_).pow(-n);
    }

    RatFunc inflated(long k) const { return RatFunc(num_.inflated(k), den_.inflated(k)); }
    RatFunc deflated(long k) const { return RatFunc(num_.deflated(k), den_.deflated(k)); }
    // splits into (even v-exponent part, odd part)
    std::pair<RatFunc, RatFunc> evenOddSplit() const;

    std::string str() const;

private:
    void normalize();
    void renormalizeUnit();
    LaurentInt num_, den_;
};

}  // namespace qsl2

#endif
