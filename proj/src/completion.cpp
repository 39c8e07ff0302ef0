#include "qsl2/completion.hpp"

namespace qsl2 {

LaurentInt scalarModulus(ScalarRing ring, long precision) {
    if (precision < 0) throw std::domain_error("scalarModulus: negative precision");
    LaurentInt m;
    switch (ring) {
        case ScalarRing::A: throw std::domain_error("scalarModulus: exact ring has no modulus");
        case ScalarRing::AHat: m = braceFactorial(precision); break;
        case ScalarRing::ADot: m = brace(1).pow(precision); break;
    }
    if (m.leadCoeff() < 0) m = -m;
    return m.shifted(-m.lowExp());
}

namespace {

// remainder modulo a polynomial with lowest exponent 0, unit constant term
// and unit leading coefficient; v is invertible in the quotient
LaurentInt polyMod(const LaurentInt& p, const LaurentInt& m) {
    LaurentInt r = p;
    const long dm = m.highExp();
    const Int& lead = m.leadCoeff();
    while (!r.isZero() && r.highExp() >= dm) {
        Int c = r.leadCoeff();
        Int q = c / lead;  // lead is +-1
        r -= m * LaurentInt::monomial(q, r.highExp() - dm);
    }
    return r;
}

}  // namespace

ScalarApprox scalarReduce(ScalarRing ring, const LaurentInt& x, long precision) {
    if (ring == ScalarRing::A) return {ring, x, precision};
    LaurentInt m = scalarModulus(ring, precision);
    if (m.isOne()) return {ring, LaurentInt(), precision};
    LaurentInt r = x;
    long shift = 0;
    if (!r.isZero() && r.lowExp() < 0) {
        shift = -r.lowExp();
        r = r.shifted(shift);
    }
    r = polyMod(r, m);
    if (shift > 0) {
        // v^-1 = -eps * (m - eps)/v  mod m, where eps = constant term (+-1)
        Int eps = m.coeff(0);
        LaurentInt w = (m - LaurentInt(eps)).shifted(-1);
        if (eps == 1) w = -w;
        for (long i = 0; i < shift; ++i) r = polyMod(r * w, m);
    }
    return {ring, r, precision};
}

namespace {

LaurentInt integralCoeff(const RatFunc& c, const char* where) {
    if (!c.isIntegral()) throw std::domain_error(std::string(where) + ": non-integral input");
    return c.asLaurent();
}

}  // namespace

TruncatedElement uTruncate(const PBWElement& x, Filtration filt, long n) {
    if (n < 0) throw std::domain_error("uTruncate: negative level");
    TruncatedElement out(filt, n);
    for (auto& [am, t] : x.torusParts()) {
        auto [a, m] = am;
        if (m >= n) continue;
        if (filt == Filtration::Un) {
            BBBExpansion ex = expandBBBPrefix(t, n);
            for (long j = 0; j < n; ++j) {
                LaurentInt ca = integralCoeff(ex.coeffs[j].first, "uTruncate");
                LaurentInt cb = integralCoeff(ex.coeffs[j].second, "uTruncate");
                out.set(TruncKey{a, 0, j, m}, scalarReduce(ScalarRing::AHat, ca, n).rep);
                out.set(TruncKey{a, 1, j, m}, scalarReduce(ScalarRing::AHat, cb, n).rep);
            }
        } else {
            auto coeffs = expandHPow(t);
            for (long j = 0; j < n - m && j < static_cast<long>(coeffs.size()); ++j) {
                LaurentInt ca = integralCoeff(coeffs[j].first, "uTruncate");
                LaurentInt cb = integralCoeff(coeffs[j].second, "uTruncate");
                out.set(TruncKey{a, 0, j, m}, scalarReduce(ScalarRing::ADot, ca, n - j - m).rep);
                out.set(TruncKey{a, 1, j, m}, scalarReduce(ScalarRing::ADot, cb, n - j - m).rep);
            }
        }
    }
    return out;
}

PBWElement assembleTruncated(const TruncatedElement& t) {
    PBWElement r;
    for (auto& [key, c] : t.coeffs()) {
        TorusElement torus = TorusElement::kPower(key.delta, RatFunc(c));
        torus *= (t.filtration() == Filtration::Un) ? makeBBB(key.j) : braceH(0).pow(key.j);
        r += PBWElement::sandwich(key.f, torus, key.e);
    }
    return r;
}

bool torusInDoubleIdeal(const TorusElement& t, long k, long l) {
    BBBExpansion ex = expandBBBPrefix(t, l);
    for (auto& [a, b] : ex.coeffs) {
        LaurentInt ca = integralCoeff(a, "torusInDoubleIdeal");
        LaurentInt cb = integralCoeff(b, "torusInDoubleIdeal");
        if (!scalarReduce(ScalarRing::AHat, ca, k).rep.isZero()) return false;
        if (!scalarReduce(ScalarRing::AHat, cb, k).rep.isZero()) return false;
    }
    return true;
}

Membership idealMember(const PBWElement& x, const IdealSpec& ideal) {
    if (!x.isIntegral()) throw std::domain_error("idealMember: non-integral element");
    switch (ideal.kind) {
        case IdealSpec::U1pow:
            return uTruncate(x, Filtration::U1pow, ideal.n).isZero() ? Membership::IN
                                                                     : Membership::OUT;
        case IdealSpec::U0kl: {
            for (auto& [m, c] : x.coeffs()) {
                (void)c;
                if (m.f != 0 || m.e != 0)
                    throw std::domain_error("idealMember: U0kl expects a torus element");
            }
            TorusElement t;
            for (auto& [m, c] : x.coeffs()) t.add(m.k, c);
            return torusInDoubleIdeal(t, ideal.k, ideal.l) ? Membership::IN : Membership::OUT;
        }
        case IdealSpec::UenCentral: {
            CentralPoly p = sigmaExpand(x);  // rejects non-central input
            if (p.isZero()) return Membership::IN;
            return p.minIndex() >= ideal.n ? Membership::IN : Membership::OUT;
        }
        case IdealSpec::UPrimeN: {
            const long n = ideal.n;
            bool allCertified = true;
            for (auto& [am, t] : x.torusParts()) {
                auto m = am.second;
                if (m >= n) continue;
                long q = n - m;
                if (!torusInDoubleIdeal(t, q, q)) allCertified = false;
                long kk = (q + 1) / 2;
                if (!torusInDoubleIdeal(t, kk, kk)) return Membership::OUT;
            }
            return allCertified ? Membership::IN : Membership::UNKNOWN;
        }
        case IdealSpec::Un: {
            const long n = ideal.n;
            if (uTruncate(x, Filtration::Un, n).isZero()) return Membership::IN;
            const long h = (n + 1) / 2;
            for (auto& [am, t] : x.torusParts()) {
                auto m = am.second;
                if (m >= h) continue;
                long kk = (h - m + 1) / 2;
                if (!torusInDoubleIdeal(t, kk, kk)) return Membership::OUT;
            }
            return Membership::UNKNOWN;
        }
    }
    throw std::domain_error("idealMember: unknown ideal");
}

void CentralSeries::add(long n, const LaurentInt& a, const LaurentInt& b) {
    if (n >= precision_) return;
    LaurentInt ra = a, rb = b;
    if (ring_ != ScalarRing::A) {
        auto& slot = coeffs_[n];
        ra = scalarReduce(ring_, slot.first + a, precision_).rep;
        rb = scalarReduce(ring_, slot.second + b, precision_).rep;
        slot = {ra, rb};
        if (ra.isZero() && rb.isZero()) coeffs_.erase(n);
        return;
    }
    auto& slot = coeffs_[n];
    slot.first += ra;
    slot.second += rb;
    if (slot.first.isZero() && slot.second.isZero()) coeffs_.erase(n);
}

CentralSeries CentralSeries::fromPoly(ScalarRing ring, long precision, const CentralPoly& p) {
    CentralSeries s(ring, precision);
    for (auto& [n, ab] : p.coeffs()) {
        if (n >= precision) continue;
        s.add(n, ab.first.asLaurent(), ab.second.asLaurent());
    }
    return s;
}

CentralSeries centralSeriesAdd(const CentralSeries& x, const CentralSeries& y) {
    if (x.ring() != y.ring()) throw std::domain_error("centralSeries: ring mismatch");
    CentralSeries r(x.ring(), std::min(x.precision(), y.precision()));
    for (auto& [n, ab] : x.coeffs()) r.add(n, ab.first, ab.second);
    for (auto& [n, ab] : y.coeffs()) r.add(n, ab.first, ab.second);
    return r;
}

CentralSeries centralSeriesMul(const CentralSeries& x, const CentralSeries& y) {
    if (x.ring() != y.ring()) throw std::domain_error("centralSeries: ring mismatch");
    CentralSeries r(x.ring(), std::min(x.precision(), y.precision()));
    const LaurentInt bracket2sq = bracket(2) * bracket(2);
    for (auto& [m, abx] : x.coeffs()) {
        for (auto& [n, aby] : y.coeffs()) {
            auto base = sigmaProductCoeffs(m, n);
            const LaurentInt aa = abx.first * aby.first;
            const LaurentInt bb = abx.second * aby.second;
            const LaurentInt ab = abx.first * aby.second + abx.second * aby.first;
            for (auto& [idx, cRat] : base) {
                LaurentInt c = cRat.asLaurent();
                r.add(idx, aa * c, ab * c);
                if (!bb.isZero()) {
                    // C^2 sigma_idx = sigma_1 sigma_idx + [2]^2 sigma_idx
                    r.add(idx, bb * c * bracket2sq, LaurentInt());
                    for (auto& [idx2, c2] : sigmaProductCoeffs(1, idx))
                        r.add(idx2, bb * c * c2.asLaurent(), LaurentInt());
                }
            }
        }
    }
    return r;
}

}  // namespace qsl2
