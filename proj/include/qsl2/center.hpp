#ifndef QSL2_CENTER_HPP
#define QSL2_CENTER_HPP

#include "qsl2/hopf.hpp"

namespace qsl2 {

// coefficients over the basis {sigma_n, C sigma_n}: n -> (a_n, b_n)
class CentralPoly {
public:
    using Map = std::map<long, std::pair<RatFunc, RatFunc>>;

    CentralPoly() = default;

    const Map& coeffs() const { return coeffs_; }
    std::pair<RatFunc, RatFunc> at(long n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? std::pair<RatFunc, RatFunc>{} : it->second;
    }
    void add(long n, const RatFunc& a, const RatFunc& b) {
        auto& slot = coeffs_[n];
        slot.first += a;
        slot.second += b;
        if (slot.first.isZero() && slot.second.isZero()) coeffs_.erase(n);
    }
    bool isZero() const { return coeffs_.empty(); }
    long maxIndex() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    long minIndex() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }
    bool isIntegral() const {
        for (auto& [n, ab] : coeffs_) {
            (void)n;
            if (!ab.first.isIntegral() || !ab.second.isIntegral()) return false;
        }
        return true;
    }
    friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

private:
    Map coeffs_;
};

// C = (v - v^-1) F^(1) e + v K + v^-1 K^-1
PBWElement casimir();
// sigma_n = prod_{i=1..n} (C^2 - (v^i + v^-i)^2)
PBWElement sigma(long n);
// phi(sigma_n) = BB(H;n) BB(H+1+n;n)
TorusElement sigmaBar(long n);

enum class XiVariant { Plain, Primed };
// xi_m = prod_{i=1..m} (C - v^{2i+1} - v^{-2i-1});
// xi'_m replaces the scalars with v^{2i+1} K + v^{-2i-1} K^-1
PBWElement xiProduct(long m, XiVariant variant);

// Harish-Chandra projection of a Z-degree-0 element: drops every monomial
// with matching positive F- and e-powers, keeps the K-polynomial part
TorusElement harishChandra(const PBWElement& x);

// commutation with K, e, F^(1)
bool isCentral(const PBWElement& x);

// unique expansion z = sum_n (a_n + b_n C) sigma_n, by peeling top K-degrees
// of phi(z); domain error when z is not central
CentralPoly sigmaExpand(const PBWElement& z);
PBWElement assembleCentral(const CentralPoly& p);

// sigma-tilde_n computed through the adjoint-action expansion
// sum_i (-1)^i BB(2n+1;2n-i) F^(i)e^i |> F^(n)K^{-n}e^n; equals
// v^{-n^2+n} {n}! sigma_n
PBWElement sigmaTilde(long n);
// oracle for small n: ({2n}!)^{-1} xi_{2n} |> F^(n)K^{-n}e^n with the
// division checked exact
PBWElement sigmaTildeViaXi(long n);
// the torus-side closed form for phi(sigmaTilde(n))
TorusElement sigmaTildePhiClosedForm(long n);

// closed form for e^j |> F^(n) assembled from the kappa kernel
PBWElement adjointEonFClosedForm(long j, long n);

struct IntegralityCertificate {
    long n = 0;
    // per j = 0..2n: {2n-j}! (e^j |> F^(n)) and its exact quotient by {n}!
    std::vector<PBWElement> scaledLeft;
    std::vector<PBWElement> leftQuotientByBraceFact;
    // per j: expansion terms (prefix x, suffix y) with x e^n y the factor
    // F^(j) |> K^{-n} e^n
    std::vector<std::vector<std::pair<PBWElement, PBWElement>>> rightWitness;
    bool reassemblesSigma = false;
};

// the divisibility bookkeeping behind sigma_n's membership in the e^n-ideal;
// throws logic_error when any exactness obligation fails
IntegralityCertificate integralityWitness(long n);

// coefficients of sigma_m sigma_n over the sigma-basis:
// sum_i BB(m;i) BB(n;i) bb(m+n+1;i) sigma_{m+n-i}
std::map<long, RatFunc> sigmaProductCoeffs(long m, long n);

}  // namespace qsl2

#endif
