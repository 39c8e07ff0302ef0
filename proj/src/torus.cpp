#include "qsl2/torus.hpp"

namespace qsl2 {

TorusElement braceH(long j) {
    TorusElement r;
    r.add(1, RatFunc(LaurentInt::power(j)));
    r.add(-1, RatFunc(-LaurentInt::power(-j)));
    return r;
}

TorusElement makeBraceH(long m, long n) {
    if (n < 0) throw std::domain_error("makeBraceH: n < 0");
    TorusElement r(1);
    for (long k = 0; k < n; ++k) r *= braceH(m - k);
    return r;
}

TorusElement makeBBB(long l) {
    if (l < 0) throw std::domain_error("makeBBB: l < 0");
    TorusElement r(1);
    for (long i = 0; i < l; ++i) {
        TorusElement f = TorusElement::kPower(2);
        f.add(0, RatFunc(-LaurentInt::power(2 * i)));  // K^2 - q^i
        r *= f;
    }
    return r;
}

TorusElement gammaShift(long j, const TorusElement& t) {
    TorusElement r;
    for (auto& [p, c] : t.coeffs())
        r.add(p, c * RatFunc(LaurentInt::power(j * p)));
    return r;
}

TorusElement wInvolution(const TorusElement& t) {
    TorusElement r;
    for (auto& [p, c] : t.coeffs())
        r.add(-p, c * RatFunc(LaurentInt::power(-2 * p)));
    return r;
}

RatFunc evalK(long j, const TorusElement& t) {
    RatFunc r;
    for (auto& [p, c] : t.coeffs())
        r += c * RatFunc(LaurentInt::power(j * p));
    return r;
}

namespace {

// canonical representative of t modulo K^2 - q^j, supported on K^0 and K^1
TorusElement repModStep(const TorusElement& t, long j) {
    TorusElement r;
    for (auto& [p, c] : t.coeffs()) {
        long delta = ((p % 2) + 2) % 2;
        long i = (p - delta) / 2;
        r.add(delta, c * RatFunc(LaurentInt::power(2 * j * i)));  // q^{ij}
    }
    return r;
}

// exact division by K^2 - q^j; asserts divisibility
TorusElement divideByStep(const TorusElement& t, long j) {
    if (t.isZero()) return t;
    long shift = t.lowK() < 0 ? -t.lowK() : 0;
    if (shift % 2 != 0) ++shift;
    // polynomial division in K by the monic K^2 - q^j
    std::map<long, RatFunc> work;
    for (auto& [p, c] : t.coeffs()) work[p + shift] = c;
    RatFunc qj(LaurentInt::power(2 * j));
    TorusElement quot;
    while (!work.empty()) {
        auto top = work.rbegin();
        long d = top->first;
        RatFunc c = top->second;
        if (d < 2) throw std::logic_error("torus: inexact division by K^2-q^j");
        quot.add(d - 2 - shift, c);
        work.erase(std::prev(work.end()));
        auto [it, inserted] = work.emplace(d - 2, c * qj);
        if (!inserted) it->second += c * qj;
        if (it->second.isZero()) work.erase(it);
    }
    return quot;
}

}  // namespace

BBBExpansion expandBBBPrefix(const TorusElement& t, long steps) {
    BBBExpansion out;
    TorusElement r = t;
    for (long j = 0; j < steps; ++j) {
        TorusElement rep = repModStep(r, j);
        out.coeffs.emplace_back(rep.coeff(0), rep.coeff(1));
        r = divideByStep(r - rep, j);
    }
    out.remainder = r;
    return out;
}

std::optional<std::vector<LinearCoeff>> expandBBB(const TorusElement& t, long maxSteps) {
    std::vector<LinearCoeff> out;
    TorusElement r = t;
    for (long j = 0; j < maxSteps && !r.isZero(); ++j) {
        TorusElement rep = repModStep(r, j);
        out.emplace_back(rep.coeff(0), rep.coeff(1));
        r = divideByStep(r - rep, j);
    }
    if (!r.isZero()) return std::nullopt;
    while (!out.empty() && out.back().first.isZero() && out.back().second.isZero()) out.pop_back();
    return out;
}

std::vector<LinearCoeff> expandHPow(const TorusElement& t) {
    std::vector<LinearCoeff> out;
    TorusElement r = t;
    while (!r.isZero()) {
        // representative modulo {H}: K^2 = 1
        TorusElement rep;
        for (auto& [p, c] : r.coeffs()) rep.add(((p % 2) + 2) % 2, c);
        out.emplace_back(rep.coeff(0), rep.coeff(1));
        // divide by {H} = K^-1 (K^2 - 1)
        TorusElement diff = r - rep;
        TorusElement shifted;
        for (auto& [p, c] : diff.coeffs()) shifted.add(p + 1, c);
        r = divideByStep(shifted, 0);
    }
    while (!out.empty() && out.back().first.isZero() && out.back().second.isZero()) out.pop_back();
    return out;
}

TorusElement assembleBBB(const std::vector<LinearCoeff>& coeffs) {
    TorusElement r;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        TorusElement lin(coeffs[j].first);
        lin.add(1, coeffs[j].second);
        r += lin * makeBBB(static_cast<long>(j));
    }
    return r;
}

TorusElement assembleHPow(const std::vector<LinearCoeff>& coeffs) {
    TorusElement r;
    TorusElement hpow(1);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        TorusElement lin(coeffs[j].first);
        lin.add(1, coeffs[j].second);
        r += lin * hpow;
        hpow *= braceH(0);
    }
    return r;
}

std::optional<TorusElement> divideByBraceH(const TorusElement& t, long n) {
    if (n == 0) return t;
    // BB(H;n) = v^{-n(n-1)/2} K^-n BBB(H;n)
    BBBExpansion ex = expandBBBPrefix(t, n);
    for (auto& [a, b] : ex.coeffs)
        if (!a.isZero() || !b.isZero()) return std::nullopt;
    TorusElement unit = TorusElement::kPower(n, RatFunc(LaurentInt::power(n * (n - 1) / 2)));
    return ex.remainder * unit;
}

namespace {

// v^{e/2} on the doubled grid, optionally times K^p
TorusElement halfMono(long halfExp, long kPow) {
    return TorusElement::kPower(kPow, RatFunc(LaurentInt::power(halfExp)));
}

TorusElement doubledBB(HSpec a, long shift, long r) {
    if (a.hasH) return makeBraceH(a.offset + shift, r).inflated(2);
    return TorusElement(RatFunc(braceProduct(a.offset + shift, r).inflated(2)));
}

}  // namespace

HalfGridTorus kappa(HSpec a, long r, HSpec b, long s, long c) {
    if (r < 0 || s < 0) throw std::domain_error("kappa: negative r or s");
    TorusElement acc;
    for (long j = 0; j <= s; ++j) {
        // v^{(s-2j)(-s+1+2b+rc)/2}, with the H part of b turning into K^{s-2j}
        long halfExp = (s - 2 * j) * (-s + 1 + 2 * b.offset + r * c);
        long kPow = b.hasH ? (s - 2 * j) : 0;
        TorusElement term = halfMono(halfExp, kPow);
        term = RatFunc(qBinomial(s, j).inflated(2)) * term;
        if (j % 2 != 0) term = -term;
        acc += term * doubledBB(a, j * c, r);
    }
    return {acc};
}

HalfGridTorus kappaDoubleSum(HSpec a, long r, HSpec b, long s, long c) {
    if (r < 0 || s < 0) throw std::domain_error("kappa: negative r or s");
    TorusElement acc;
    for (long i = 0; i <= r; ++i) {
        for (long j = 0; j <= s; ++j) {
            long halfExp = (r - 2 * i) * (-r + 1 + 2 * a.offset) +
                           (s - 2 * j) * (-s + 1 + 2 * b.offset) +
                           c * (r * s - 4 * j * i);
            long kPow = (a.hasH ? (r - 2 * i) : 0) + (b.hasH ? (s - 2 * j) : 0);
            TorusElement term = halfMono(halfExp, kPow);
            term = RatFunc((qBinomial(r, i) * qBinomial(s, j)).inflated(2)) * term;
            if ((i + j) % 2 != 0) term = -term;
            acc += term;
        }
    }
    return {acc};
}

}  // namespace qsl2
