#include "qsl2/qsymbols.hpp"

#include <mutex>
#include <stdexcept>

namespace qsl2 {

LaurentInt brace(long a) {
    LaurentInt r;
    if (a == 0) return r;
    r.add(a, 1);
    r.add(-a, -1);
    return r;
}

LaurentInt bracket(long a) {
    // v^{a-1} + v^{a-3} + ... + v^{1-a}
    LaurentInt r;
    long n = a < 0 ? -a : a;
    for (long e = n - 1; e >= 1 - n; e -= 2) r.add(e, a < 0 ? -1 : 1);
    return r;
}

LaurentInt braceFactorial(long n) {
    if (n < 0) throw std::domain_error("braceFactorial: n < 0");
    LaurentInt r(1);
    for (long k = 1; k <= n; ++k) r *= brace(k);
    return r;
}

LaurentInt bracketFactorial(long n) {
    if (n < 0) throw std::domain_error("bracketFactorial: n < 0");
    LaurentInt r(1);
    for (long k = 1; k <= n; ++k) r *= bracket(k);
    return r;
}

LaurentInt qPochhammer(long n) {
    if (n < 0) throw std::domain_error("qPochhammer: n < 0");
    LaurentInt r(1);
    for (long k = 1; k <= n; ++k) {
        LaurentInt f(1);
        f.add(2 * k, -1);  // 1 - q^k
        r *= f;
    }
    return r;
}

LaurentInt braceProduct(long a, long n) {
    if (n < 0) throw std::domain_error("braceProduct: n < 0");
    LaurentInt r(1);
    for (long k = 0; k < n; ++k) r *= brace(a - k);
    return r;
}

RatFunc qBinomialRat(long a, long n) {
    if (n < 0) throw std::domain_error("qBinomial: n < 0");
    return RatFunc(braceProduct(a, n), braceFactorial(n));
}

LaurentInt qBinomial(long a, long n) {
    RatFunc r = qBinomialRat(a, n);
    if (!r.isIntegral())
        throw std::logic_error("qBinomial with integer arguments must be integral");
    return r.asLaurent();
}

RatFunc qScalar(QScalarKind kind, const std::vector<long>& args) {
    auto need = [&](size_t n) {
        if (args.size() != n) throw std::domain_error("qScalar: wrong arity");
    };
    switch (kind) {
        case QScalarKind::Brace: need(1); return RatFunc(brace(args[0]));
        case QScalarKind::Bracket: need(1); return RatFunc(bracket(args[0]));
        case QScalarKind::BraceFact: need(1); return RatFunc(braceFactorial(args[0]));
        case QScalarKind::BracketFact: need(1); return RatFunc(bracketFactorial(args[0]));
        case QScalarKind::QPoch: need(1); return RatFunc(qPochhammer(args[0]));
        case QScalarKind::BB: need(2); return RatFunc(braceProduct(args[0], args[1]));
        case QScalarKind::Bb: {
            need(2);
            RatFunc r = qBinomialRat(args[0], args[1]);
            if (!r.isIntegral())
                throw std::logic_error("qScalar: q-binomial with integer top must be integral");
            return r;
        }
    }
    throw std::domain_error("qScalar: unknown kind");
}

namespace {

// ordinary cyclotomic polynomial in q, as a polynomial in v with q = v^2
LaurentInt cycloInQ(long d) {
    static std::map<long, LaurentInt> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // fill divisors bottom-up: Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q)
    for (long k = 1; k <= d; ++k) {
        if (d % k != 0 || cache.count(k)) continue;
        LaurentInt num;
        num.add(2 * k, 1);
        num.add(0, -1);
        for (long e = 1; e < k; ++e) {
            if (k % e != 0) continue;
            auto q = divExact(num, cache.at(e));
            if (!q) throw std::logic_error("cyclotomic recursion: inexact division");
            num = *q;
        }
        cache.emplace(k, num);
    }
    return cache.at(d);
}

}  // namespace

LaurentInt balancedCyclo(long d) {
    if (d < 1) throw std::domain_error("balancedCyclo: d < 1");
    LaurentInt phi = cycloInQ(d);
    return phi.shifted(-phi.highExp() / 2);  // divide by v^{deg Phi_d(q)} (degree in q doubled in v)
}

CycloProfile CycloProfile::ofBrace(long n) {
    if (n < 1) throw std::domain_error("CycloProfile: brace index < 1");
    CycloProfile r;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) r.add(d, 1);
    return r;
}

CycloProfile CycloProfile::ofBraceFactorial(long n) {
    if (n < 0) throw std::domain_error("CycloProfile: n < 0");
    CycloProfile r;
    for (long d = 1; d <= n; ++d) r.add(d, n / d);
    return r;
}

CycloProfile CycloProfile::ofQBinomial(long m, long n) {
    if (m < 0 || n < 0) throw std::domain_error("CycloProfile: negative binomial args");
    CycloProfile r;
    for (long d = 1; d <= m + n; ++d) r.add(d, (m + n) / d - m / d - n / d);
    return r;
}

RatFunc CycloProfile::reconstructRat() const {
    LaurentInt num(1), den(1);
    for (auto& [d, e] : exps_) {
        if (e > 0) num *= balancedCyclo(d).pow(e);
        else den *= balancedCyclo(d).pow(-e);
    }
    return RatFunc(num, den);
}

LaurentInt CycloProfile::reconstruct() const {
    if (!allNonNegative())
        throw std::domain_error("CycloProfile: negative exponent in reconstruct");
    LaurentInt r(1);
    for (auto& [d, e] : exps_) r *= balancedCyclo(d).pow(e);
    return r;
}

CycloProfile cycloFactorize(const std::vector<CycloFactor>& factors) {
    CycloProfile r;
    for (auto& f : factors) {
        CycloProfile p;
        switch (f.kind) {
            case QScalarKind::Brace:
                if (f.args.size() != 1) throw std::domain_error("cycloFactorize: brace arity");
                p = CycloProfile::ofBrace(f.args[0]);
                break;
            case QScalarKind::BraceFact:
                if (f.args.size() != 1) throw std::domain_error("cycloFactorize: factorial arity");
                p = CycloProfile::ofBraceFactorial(f.args[0]);
                break;
            case QScalarKind::Bb:
                if (f.args.size() != 2) throw std::domain_error("cycloFactorize: binomial arity");
                if (f.args[0] < f.args[1] || f.args[1] < 0)
                    throw std::domain_error("cycloFactorize: binomial needs top >= bottom >= 0");
                p = CycloProfile::ofQBinomial(f.args[1], f.args[0] - f.args[1]);
                break;
            default:
                throw std::domain_error("cycloFactorize: unsupported factor kind");
        }
        r *= p.powAdded(f.multiplicity);
    }
    return r;
}

LaurentInt thetaLem16(long a, long b, long x, long y) {
    if (a < 0 || b < 0 || x < 0 || y < 0) throw std::domain_error("theta: negative argument");
    RatFunc psi(braceFactorial(a + x + y) * braceFactorial(a),
                braceFactorial(a + x) * braceFactorial(a + y));
    RatFunc r = psi * qBinomialRat(x + y, x) * qBinomialRat(b + x + y, b) *
                qBinomialRat(2 * a + b + x + y, a);
    if (!r.isIntegral())
        throw std::logic_error("theta(a,b,x,y) must lie in Z[v,v^-1]");
    return r.asLaurent();
}

namespace {
long fd(long n, long d) { return n >= 0 ? n / d : -((-n + d - 1) / d); }
long tauD(long d, long x, long y) { return fd(x + y, d) - fd(x, d) - fd(y, d); }
long psiD(long d, long a, long x, long y) {
    return fd(a + x + y, d) + fd(a, d) - fd(a + x, d) - fd(a + y, d);
}
}  // namespace

long thetaExponentD(long d, long a, long b, long x, long y) {
    if (d < 1) throw std::domain_error("thetaExponentD: d < 1");
    return psiD(d, a, x, y) + tauD(d, x, y) + tauD(d, b, x + y) + tauD(d, a, a + b + x + y);
}

CycloProfile thetaProfile(long a, long b, long x, long y) {
    CycloProfile r;
    long bound = 2 * a + b + x + y;
    for (long d = 1; d <= bound; ++d) r.add(d, thetaExponentD(d, a, b, x, y));
    return r;
}

}  // namespace qsl2
