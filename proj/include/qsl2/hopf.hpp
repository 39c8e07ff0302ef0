#ifndef QSL2_HOPF_HPP
#define QSL2_HOPF_HPP

#include "qsl2/pbw.hpp"

namespace qsl2 {

// Order-2 and order-3 tensors of PBW elements, componentwise normal form.
class TensorElement {
public:
    using Key = std::vector<PBWMonomial>;
    using Map = std::map<Key, RatFunc>;

    explicit TensorElement(int order = 2) : order_(order) {
        if (order != 2 && order != 3) throw std::domain_error("tensor: order must be 2 or 3");
    }

    static TensorElement unit(int order) {
        TensorElement t(order);
        t.coeffs_[Key(order)] = RatFunc(1);
        return t;
    }

    int order() const { return order_; }
    bool isZero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }

    void add(const Key& key, const RatFunc& c) {
        if (static_cast<int>(key.size()) != order_) throw std::domain_error("tensor: key order mismatch");
        if (c.isZero()) return;
        auto [it, inserted] = coeffs_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) coeffs_.erase(it);
        }
    }

    TensorElement operator-() const {
        TensorElement r(order_);
        for (auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
        return r;
    }
    TensorElement& operator+=(const TensorElement& o) {
        if (o.order_ != order_) throw std::domain_error("tensor: order mismatch");
        for (auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) { return *this += -o; }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { a += b; return a; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { a -= b; return a; }
    friend TensorElement operator*(const RatFunc& c, const TensorElement& t) {
        TensorElement r(t.order_);
        for (auto& [k, x] : t.coeffs_) r.add(k, c * x);
        return r;
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    bool isIntegral() const {
        for (auto& [k, c] : coeffs_) { (void)k; if (!c.isIntegral()) return false; }
        return true;
    }

private:
    int order_;
    Map coeffs_;
};

TensorElement simpleTensor(const PBWElement& l, const PBWElement& r);
TensorElement simpleTensor3(const PBWElement& a, const PBWElement& b, const PBWElement& c);

// componentwise product, renormalizing each slot
TensorElement tensorMul(const TensorElement& x, const TensorElement& y);

// comultiplication, counit and antipode of the integral form
TensorElement coproduct(const PBWElement& x);
RatFunc counit(const PBWElement& x);
PBWElement antipode(const PBWElement& x);

// apply coproduct inside one slot of an order-2 tensor (for coassociativity)
TensorElement coproductSlot(const TensorElement& t, int slot);
// apply counit to one slot, collapsing to a PBW element
PBWElement counitSlot(const TensorElement& t, int slot);
// apply antipode to a slot then multiply the two slots together
PBWElement muSlotwise(const TensorElement& t, bool antipodeLeft, bool antipodeRight);

// left adjoint action x |> y = sum x_(1) y S(x_(2))
PBWElement adjoint(const PBWElement& x, const PBWElement& y);

// closed forms for adjoint actions of e-powers and divided F-powers on a
// Z-homogeneous element; fast paths validated against `adjoint`
PBWElement adjointEPow(long m, const PBWElement& x);
PBWElement adjointFDiv(long m, const PBWElement& x);

// partial sum of the quasi-R-matrix: terms n < N of
// sum_n (-1)^n v^{-n(n-1)/2} F^(n) (x) e^n
TensorElement thetaTrunc(long n);

}  // namespace qsl2

#endif
