#include "qsl2/hopf.hpp"

#include <mutex>

namespace qsl2 {

TensorElement simpleTensor(const PBWElement& l, const PBWElement& r) {
    TensorElement t(2);
    for (auto& [ml, cl] : l.coeffs())
        for (auto& [mr, cr] : r.coeffs())
            t.add({ml, mr}, cl * cr);
    return t;
}

TensorElement simpleTensor3(const PBWElement& a, const PBWElement& b, const PBWElement& c) {
    TensorElement t(3);
    for (auto& [ma, ca] : a.coeffs())
        for (auto& [mb, cb] : b.coeffs())
            for (auto& [mc, cc] : c.coeffs())
                t.add({ma, mb, mc}, ca * cb * cc);
    return t;
}

TensorElement tensorMul(const TensorElement& x, const TensorElement& y) {
    if (x.order() != y.order()) throw std::domain_error("tensorMul: order mismatch");
    TensorElement r(x.order());
    for (auto& [kx, cx] : x.coeffs())
        for (auto& [ky, cy] : y.coeffs()) {
            std::vector<PBWElement> slots(x.order());
            for (int s = 0; s < x.order(); ++s)
                slots[s] = mul(PBWElement::monomial(kx[s].f, kx[s].k, kx[s].e),
                               PBWElement::monomial(ky[s].f, ky[s].k, ky[s].e));
            RatFunc c = cx * cy;
            if (x.order() == 2) {
                TensorElement t = simpleTensor(slots[0], slots[1]);
                r += c * t;
            } else {
                TensorElement t = simpleTensor3(slots[0], slots[1], slots[2]);
                r += c * t;
            }
        }
    return r;
}

namespace {

// Delta(e^m) = sum_i v^{-i(m-i)} bb(m;i) K^i e^{m-i} (x) e^i
TensorElement coproductEPow(long m) {
    TensorElement t(2);
    for (long i = 0; i <= m; ++i) {
        RatFunc c = RatFunc(qBinomial(m, i)) * RatFunc(LaurentInt::power(-i * (m - i)));
        t.add({PBWMonomial{0, i, m - i}, PBWMonomial{0, 0, i}}, c);
    }
    return t;
}

// Delta(F^(m)) = sum_i v^{i(m-i)} F^(m-i) (x) F^(i) K^{-m+i}
TensorElement coproductFDiv(long m) {
    TensorElement t(2);
    for (long i = 0; i <= m; ++i) {
        RatFunc c(LaurentInt::power(i * (m - i)));
        t.add({PBWMonomial{m - i, 0, 0}, PBWMonomial{i, -m + i, 0}}, c);
    }
    return t;
}

// per-monomial images are memoized; the cache is invisible to callers
TensorElement coproductMonomial(const PBWMonomial& m) {
    static std::map<PBWMonomial, TensorElement> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    TensorElement t = coproductFDiv(m.f);
    if (m.k != 0) {
        TensorElement k(2);
        k.add({PBWMonomial{0, m.k, 0}, PBWMonomial{0, m.k, 0}}, RatFunc(1));
        t = tensorMul(t, k);
    }
    if (m.e > 0) t = tensorMul(t, coproductEPow(m.e));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, t);
    return t;
}

// S(e^m) = (-1)^m v^{m(m-1)} K^-m e^m ; S(F^(m)) = (-1)^m v^{-m(m-1)} F^(m) K^m
PBWElement antipodeMonomial(const PBWMonomial& m) {
    RatFunc c(LaurentInt::power(m.e * (m.e - 1) - m.f * (m.f - 1)));
    if ((m.e + m.f) % 2 != 0) c = -c;
    // S is an antihomomorphism: S(F^(a) K^b e^m) = S(e^m) S(K^b) S(F^(a))
    PBWElement se = PBWElement::monomial(0, -m.e, m.e);
    PBWElement sk = PBWElement::genK(-m.k);
    PBWElement sf = mul(PBWElement::genF(m.f), PBWElement::genK(m.f));
    return c * mul(mul(se, sk), sf);
}

}  // namespace

TensorElement coproduct(const PBWElement& x) {
    TensorElement r(2);
    for (auto& [m, c] : x.coeffs()) r += c * coproductMonomial(m);
    return r;
}

RatFunc counit(const PBWElement& x) {
    RatFunc r;
    for (auto& [m, c] : x.coeffs())
        if (m.f == 0 && m.e == 0) r += c;
    return r;
}

PBWElement antipode(const PBWElement& x) {
    PBWElement r;
    for (auto& [m, c] : x.coeffs()) r += c * antipodeMonomial(m);
    return r;
}

TensorElement coproductSlot(const TensorElement& t, int slot) {
    if (t.order() != 2) throw std::domain_error("coproductSlot: order-2 input required");
    TensorElement r(3);
    for (auto& [key, c] : t.coeffs()) {
        TensorElement inner = coproduct(PBWElement::monomial(key[slot].f, key[slot].k, key[slot].e));
        const PBWMonomial& other = key[1 - slot];
        for (auto& [ik, ic] : inner.coeffs()) {
            if (slot == 0) r.add({ik[0], ik[1], other}, c * ic);
            else r.add({other, ik[0], ik[1]}, c * ic);
        }
    }
    return r;
}

PBWElement counitSlot(const TensorElement& t, int slot) {
    if (t.order() != 2) throw std::domain_error("counitSlot: order-2 input required");
    PBWElement r;
    for (auto& [key, c] : t.coeffs()) {
        const PBWMonomial& m = key[slot];
        if (m.f != 0 || m.e != 0) continue;
        r.add(key[1 - slot], c);
    }
    return r;
}

PBWElement muSlotwise(const TensorElement& t, bool antipodeLeft, bool antipodeRight) {
    if (t.order() != 2) throw std::domain_error("muSlotwise: order-2 input required");
    PBWElement r;
    for (auto& [key, c] : t.coeffs()) {
        PBWElement l = PBWElement::monomial(key[0].f, key[0].k, key[0].e);
        PBWElement rr = PBWElement::monomial(key[1].f, key[1].k, key[1].e);
        if (antipodeLeft) l = antipode(l);
        if (antipodeRight) rr = antipode(rr);
        r += c * mul(l, rr);
    }
    return r;
}

PBWElement adjoint(const PBWElement& x, const PBWElement& y) {
    TensorElement dx = coproduct(x);
    PBWElement r;
    for (auto& [key, c] : dx.coeffs()) {
        PBWElement left = PBWElement::monomial(key[0].f, key[0].k, key[0].e);
        PBWElement right = antipode(PBWElement::monomial(key[1].f, key[1].k, key[1].e));
        r += c * mul(mul(left, y), right);
    }
    return r;
}

namespace {

long zDegreeOf(const PBWElement& x) {
    std::optional<long> deg;
    for (auto& [m, c] : x.coeffs()) {
        (void)c;
        long d = m.e - m.f;
        if (deg && *deg != d) throw std::domain_error("adjoint fast path: input not Z-homogeneous");
        deg = d;
    }
    return deg.value_or(0);
}

}  // namespace

PBWElement adjointEPow(long m, const PBWElement& x) {
    // e^m |> x = sum_i (-1)^i v^{i(m-1+2|x|)} bb(m;i) e^{m-i} x e^i
    long deg = zDegreeOf(x);
    PBWElement r;
    for (long i = 0; i <= m; ++i) {
        RatFunc c = RatFunc(qBinomial(m, i)) * RatFunc(LaurentInt::power(i * (m - 1 + 2 * deg)));
        if (i % 2 != 0) c = -c;
        r += c * mul(mul(pbwPow(PBWElement::genE(), m - i), x), pbwPow(PBWElement::genE(), i));
    }
    return r;
}

PBWElement adjointFDiv(long m, const PBWElement& x) {
    // F^(m) |> x = sum_i (-1)^i v^{-i(m-1)} F^(m-i) x F^(i) K^m
    PBWElement r;
    for (long i = 0; i <= m; ++i) {
        RatFunc c(LaurentInt::power(-i * (m - 1)));
        if (i % 2 != 0) c = -c;
        PBWElement t = mul(mul(PBWElement::genF(m - i), x),
                           mul(PBWElement::genF(i), PBWElement::genK(m)));
        r += c * t;
    }
    return r;
}

TensorElement thetaTrunc(long n) {
    if (n < 0) throw std::domain_error("thetaTrunc: negative term count");
    TensorElement t(2);
    for (long i = 0; i < n; ++i) {
        RatFunc c(LaurentInt::power(-i * (i - 1) / 2));
        if (i % 2 != 0) c = -c;
        t.add({PBWMonomial{i, 0, 0}, PBWMonomial{0, 0, i}}, c);
    }
    return t;
}

}  // namespace qsl2
