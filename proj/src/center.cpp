#include "qsl2/center.hpp"

#include <mutex>

namespace qsl2 {

PBWElement casimir() {
    PBWElement r = PBWElement::monomial(1, 0, 1, RatFunc(brace(1)));
    r.add(PBWMonomial{0, 1, 0}, RatFunc(LaurentInt::power(1)));
    r.add(PBWMonomial{0, -1, 0}, RatFunc(LaurentInt::power(-1)));
    return r;
}

PBWElement sigma(long n) {
    if (n < 0) throw std::domain_error("sigma: n < 0");
    static std::map<long, PBWElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    PBWElement c2 = mul(casimir(), casimir());
    PBWElement r(1);
    for (long i = 1; i <= n; ++i) {
        if (auto it = cache.find(i - 1); it != cache.end()) r = it->second;
        LaurentInt s = LaurentInt::power(i) + LaurentInt::power(-i);
        PBWElement f = c2;
        f.add(PBWMonomial{}, RatFunc(-(s * s)));
        r = mul(r, f);
        cache.emplace(i, r);
    }
    if (n == 0) cache.emplace(0, PBWElement(1));
    return cache.at(n);
}

TorusElement sigmaBar(long n) {
    return makeBraceH(0, n) * makeBraceH(1 + n, n);
}

PBWElement xiProduct(long m, XiVariant variant) {
    if (m < 0) throw std::domain_error("xi: m < 0");
    PBWElement r(1);
    for (long i = 1; i <= m; ++i) {
        PBWElement f = casimir();
        if (variant == XiVariant::Plain) {
            f.add(PBWMonomial{}, RatFunc(-(LaurentInt::power(2 * i + 1) + LaurentInt::power(-2 * i - 1))));
        } else {
            f.add(PBWMonomial{0, 1, 0}, RatFunc(-LaurentInt::power(2 * i + 1)));
            f.add(PBWMonomial{0, -1, 0}, RatFunc(-LaurentInt::power(-2 * i - 1)));
        }
        r = mul(r, f);
    }
    return r;
}

TorusElement harishChandra(const PBWElement& x) {
    TorusElement r;
    for (auto& [m, c] : x.coeffs()) {
        if (m.f != m.e)
            throw std::domain_error("harishChandra: input not of Z-degree 0 (monomial F^(" +
                                    std::to_string(m.f) + ")K^" + std::to_string(m.k) + "e^" +
                                    std::to_string(m.e) + ")");
        if (m.f == 0) r.add(m.k, c);
    }
    return r;
}

bool isCentral(const PBWElement& x) {
    static const std::vector<PBWElement> gens = {PBWElement::genK(1), PBWElement::genE(),
                                                 PBWElement::genF(1)};
    for (auto& g : gens)
        if (mul(g, x) != mul(x, g)) return false;
    return true;
}

CentralPoly sigmaExpand(const PBWElement& z) {
    if (!isCentral(z)) throw std::domain_error("sigmaExpand: input is not central");
    TorusElement t = harishChandra(z);
    // phi(C) = v K + v^-1 K^-1
    TorusElement phiC = TorusElement::kPower(1, RatFunc(LaurentInt::power(1)));
    phiC.add(-1, RatFunc(LaurentInt::power(-1)));
    CentralPoly out;
    while (!t.isZero()) {
        long d = t.highK();
        if (d < 0) throw std::logic_error("sigmaExpand: peeling left negative-degree residue");
        long n = d / 2;
        RatFunc lead = t.coeff(d);
        if (d % 2 == 0) {
            // c_{2n}(sigmaBar_n) = v^{2n}
            RatFunc a = lead / RatFunc(LaurentInt::power(2 * n));
            out.add(n, a, RatFunc());
            t -= a * sigmaBar(n);
        } else {
            // c_{2n+1}(phi(C) sigmaBar_n) = v^{2n+1}
            RatFunc b = lead / RatFunc(LaurentInt::power(2 * n + 1));
            out.add(n, RatFunc(), b);
            t -= b * (phiC * sigmaBar(n));
        }
    }
    return out;
}

PBWElement assembleCentral(const CentralPoly& p) {
    PBWElement r;
    for (auto& [n, ab] : p.coeffs()) {
        PBWElement s = sigma(n);
        r += ab.first * s;
        if (!ab.second.isZero()) r += ab.second * mul(casimir(), s);
    }
    return r;
}

PBWElement sigmaTilde(long n) {
    if (n < 0) throw std::domain_error("sigmaTilde: n < 0");
    PBWElement target = mul(PBWElement::genF(n),
                            mul(PBWElement::genK(-n), pbwPow(PBWElement::genE(), n)));
    PBWElement r;
    for (long i = 0; i <= 2 * n; ++i) {
        PBWElement actor = mul(PBWElement::genF(i), pbwPow(PBWElement::genE(), i));
        RatFunc c(braceProduct(2 * n + 1, 2 * n - i));
        if (i % 2 != 0) c = -c;
        r += c * adjoint(actor, target);
    }
    return r;
}

PBWElement sigmaTildeViaXi(long n) {
    if (n < 0) throw std::domain_error("sigmaTildeViaXi: n < 0");
    PBWElement target = mul(PBWElement::genF(n),
                            mul(PBWElement::genK(-n), pbwPow(PBWElement::genE(), n)));
    PBWElement num = adjoint(xiProduct(2 * n, XiVariant::Plain), target);
    LaurentInt fact = braceFactorial(2 * n);
    PBWElement out;
    for (auto& [m, c] : num.coeffs()) {
        auto q = divExact(c.asLaurent(), fact);
        if (!q) throw std::logic_error("sigmaTildeViaXi: {2n}!-division not exact");
        out.add(m, RatFunc(*q));
    }
    return out;
}

TorusElement sigmaTildePhiClosedForm(long n) {
    // (-1)^n v^{-n^2+n} BB(H;n) sum_{i=n..2n} (-1)^i BB(i;n) bb(2n+1;i+1) BB(H+n-i;n)
    TorusElement sum;
    for (long i = n; i <= 2 * n; ++i) {
        RatFunc c(braceProduct(i, n) * qBinomial(2 * n + 1, i + 1));
        if (i % 2 != 0) c = -c;
        sum += c * makeBraceH(n - i, n);
    }
    TorusElement r = makeBraceH(0, n) * sum;
    RatFunc scale(LaurentInt::power(-n * n + n));
    if (n % 2 != 0) scale = -scale;
    return scale * r;
}

PBWElement adjointEonFClosedForm(long j, long n) {
    // e^j |> F^(n) = sum_k v^{-(j-k)(-j+1+2n)/2} bb(j;k) beta_{n,j,k} F^(n-k) e^{j-k}
    // with beta_{n,j,k} = kappa(n-k, j-k; H-j+n, k; 1); assembled on the
    // doubled v-grid, which must collapse back to the integer grid
    PBWElement outDoubled;  // coefficients on doubled grid
    for (long k = 0; k <= std::min(j, n); ++k) {
        if (j - k < 0) continue;
        HalfGridTorus beta = kappa(HSpec::integer(n - k), j - k, HSpec::hPlus(-j + n), k, 1);
        long halfExp = -(j - k) * (-j + 1 + 2 * n);
        TorusElement factor = RatFunc(qBinomial(j, k).inflated(2) *
                                      LaurentInt::power(halfExp)) * beta.doubled;
        // move the torus past F^(n-k): t F^(a) = F^(a) gamma_{-2a}(t)
        TorusElement shifted = gammaShift(-2 * (n - k) * 2, factor);  // doubled grid: v-shift doubles
        for (auto& [p, c] : shifted.coeffs())
            outDoubled.add(PBWMonomial{n - k, p, j - k}, c);
    }
    PBWElement out;
    for (auto& [m, c] : outDoubled.coeffs()) out.add(m, c.deflated(2));
    return out;
}

IntegralityCertificate integralityWitness(long n) {
    if (n < 0) throw std::domain_error("integralityWitness: n < 0");
    IntegralityCertificate cert;
    cert.n = n;
    LaurentInt nFact = braceFactorial(n);
    PBWElement target = mul(PBWElement::genK(-n), pbwPow(PBWElement::genE(), n));
    PBWElement fdivN = PBWElement::genF(n);
    PBWElement assembled;
    for (long j = 0; j <= 2 * n; ++j) {
        PBWElement left = adjointEPow(j, fdivN);
        PBWElement scaledLeft = RatFunc(braceFactorial(2 * n - j)) * left;
        PBWElement quot;
        for (auto& [m, c] : scaledLeft.coeffs()) {
            auto q = divExact(c.asLaurent(), nFact);
            if (!q) throw std::logic_error("integralityWitness: {n}!-divisibility fails");
            quot.add(m, RatFunc(*q));
        }
        cert.scaledLeft.push_back(scaledLeft);
        cert.leftQuotientByBraceFact.push_back(quot);

        // F^(j) |> K^{-n}e^n expanded term by term: each summand is
        // (-1)^i v^{-i(j-1)} F^(j-i) * (K^{-n}e^n) * F^(i) K^j
        std::vector<std::pair<PBWElement, PBWElement>> witness;
        PBWElement right;
        for (long i = 0; i <= j; ++i) {
            RatFunc c(LaurentInt::power(-i * (j - 1)));
            if (i % 2 != 0) c = -c;
            PBWElement pre = c * mul(PBWElement::genF(j - i), PBWElement::genK(-n));
            PBWElement post = mul(PBWElement::genF(i), PBWElement::genK(j));
            witness.emplace_back(pre, post);
            right += mul(mul(pre, pbwPow(PBWElement::genE(), n)), post);
        }
        cert.rightWitness.push_back(witness);
        if (right != adjoint(PBWElement::genF(j), target))
            throw std::logic_error("integralityWitness: right-factor expansion mismatch");

        // assemble the bilinear decomposition of sigma-tilde
        RatFunc c(braceFactorial(2 * n - j) * LaurentInt::power(j * (-j - 1 + 2 * n) + 2 * n));
        if (j % 2 != 0) c = -c;
        assembled += c * mul(left, right);
    }
    PBWElement expect = RatFunc(nFact * LaurentInt::power(-n * n + n)) * sigma(n);
    cert.reassemblesSigma = (assembled == expect);
    if (!cert.reassemblesSigma)
        throw std::logic_error("integralityWitness: bilinear decomposition does not reassemble");
    return cert;
}

std::map<long, RatFunc> sigmaProductCoeffs(long m, long n) {
    if (m < 0 || n < 0) throw std::domain_error("sigmaProductCoeffs: negative index");
    std::map<long, RatFunc> out;
    for (long i = 0; i <= std::min(m, n); ++i) {
        RatFunc c(braceProduct(m, i) * braceProduct(n, i) * qBinomial(m + n + 1, i));
        if (!c.isZero()) out[m + n - i] += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.isZero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace qsl2
