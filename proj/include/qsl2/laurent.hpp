#ifndef QSL2_LAURENT_HPP
#define QSL2_LAURENT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsl2/bigint.hpp"

namespace qsl2 {

// Integer Laurent polynomials in v. Only nonzero coefficients are stored;
// the empty map is the zero element.
class LaurentInt {
public:
    using Map = std::map<long, Int>;

    LaurentInt() = default;
    LaurentInt(long n) { if (n != 0) coeffs_[0] = n; }
    explicit LaurentInt(const Int& n) { if (n != 0) coeffs_[0] = n; }

    static LaurentInt monomial(const Int& c, long exp) {
        LaurentInt r;
        if (c != 0) r.coeffs_[exp] = c;
        return r;
    }
    // v^exp
    static LaurentInt power(long exp) { return monomial(1, exp); }

    bool isZero() const { return coeffs_.empty(); }
    bool isOne() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1; }
    // +-v^k
    bool isUnit() const {
        if (coeffs_.size() != 1) return false;
        const Int& c = coeffs_.begin()->second;
        return c == 1 || c == -1;
    }
    bool isMonomial() const { return coeffs_.size() == 1; }

    const Map& coeffs() const { return coeffs_; }
    Int coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }
    long lowExp() const { ensureNonzero(); return coeffs_.begin()->first; }
    long highExp() const { ensureNonzero(); return coeffs_.rbegin()->first; }
    const Int& leadCoeff() const { ensureNonzero(); return coeffs_.rbegin()->second; }

    void set(long exp, const Int& c) {
        if (c == 0) coeffs_.erase(exp); else coeffs_[exp] = c;
    }
    void add(long exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LaurentInt operator-() const {
        LaurentInt r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    LaurentInt& operator+=(const LaurentInt& o) {
        for (auto& [e, c] : o.coeffs_) add(e, c);
        return *this;
    }
    LaurentInt& operator-=(const LaurentInt& o) {
        for (auto& [e, c] : o.coeffs_) add(e, -c);
        return *this;
    }
    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { a += b; return a; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { a -= b; return a; }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_)
                r.add(ea + eb, ca * cb);
        return r;
    }
    LaurentInt& operator*=(const LaurentInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }
    friend bool operator<(const LaurentInt& a, const LaurentInt& b) { return a.coeffs_ < b.coeffs_; }

    LaurentInt shifted(long byExp) const {
        LaurentInt r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e + byExp] = c;
        return r;
    }
    // v -> v^k (multiplies every exponent by k; k != 0)
    LaurentInt inflated(long k) const;
    // inverse of inflated; every exponent must be divisible by k
    LaurentInt deflated(long k) const;
    // v -> -v
    LaurentInt substNegated() const {
        LaurentInt r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = (e % 2 != 0) ? Int(-c) : c;
        return r;
    }
    // true when every exponent is even
    bool evenSupport() const {
        for (auto& [e, c] : coeffs_) { (void)c; if (e % 2 != 0) return false; }
        return true;
    }

    LaurentInt pow(long n) const;

    // gcd of all integer coefficients (nonnegative); 0 for the zero element
    Int content() const;

    std::string str() const;

private:
    void ensureNonzero() const {
        if (coeffs_.empty()) throw std::domain_error("laurent: zero has no degree");
    }
    Map coeffs_;
};

// Exact division in Z[v,v^-1]; nullopt when y does not divide x.
std::optional<LaurentInt> divExact(const LaurentInt& x, const LaurentInt& y);

// gcd in Z[v,v^-1], normalized to lowest exponent 0 and positive leading coefficient.
LaurentInt laurentGcd(const LaurentInt& a, const LaurentInt& b);

}  // namespace qsl2

#endif
