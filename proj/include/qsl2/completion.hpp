#ifndef QSL2_COMPLETION_HPP
#define QSL2_COMPLETION_HPP

#include "qsl2/center.hpp"

namespace qsl2 {

enum class ScalarRing { A, AHat, ADot };  // exact, {n}!-adic, (v-v^-1)-adic

// modulus of the precision-N window: {N}! for AHat, {1}^N for ADot,
// unit-normalized to lowest exponent 0 and positive leading coefficient
LaurentInt scalarModulus(ScalarRing ring, long precision);

struct ScalarApprox {
    ScalarRing ring;
    LaurentInt rep;  // canonical remainder, v-exponents in [0, deg-1]
    long precision;

    friend bool operator==(const ScalarApprox&, const ScalarApprox&) = default;
};

// canonical representative; a ring homomorphism at fixed precision, and an
// exact divisibility test (rep == 0 iff the modulus divides x)
ScalarApprox scalarReduce(ScalarRing ring, const LaurentInt& x, long precision);

enum class Filtration { Un, U1pow };

struct TruncKey {
    long f = 0;
    int delta = 0;  // K^delta, delta in {0,1}
    long j = 0;     // BBB(H;j) index (Un) or {H}^j power (U1pow)
    long e = 0;
    friend bool operator==(const TruncKey&, const TruncKey&) = default;
    friend auto operator<=>(const TruncKey& a, const TruncKey& b) {
        if (auto c = a.f <=> b.f; c != 0) return c;
        if (auto c = a.e <=> b.e; c != 0) return c;
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.delta <=> b.delta;
    }
};

// Canonical representative modulo the decidable truncation window: for Un,
// coefficients of F^(a) K^delta BBB(H;j) e^m with j,m < n, reduced mod {n}!;
// for U1pow, coefficients of F^(a) K^delta {H}^j e^m with j+m < n, reduced
// mod {1}^{n-j-m}.
class TruncatedElement {
public:
    using Map = std::map<TruncKey, LaurentInt>;

    TruncatedElement(Filtration filt, long n) : filt_(filt), n_(n) {}

    Filtration filtration() const { return filt_; }
    long level() const { return n_; }
    bool isZero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }
    void set(const TruncKey& k, const LaurentInt& c) {
        if (c.isZero()) coeffs_.erase(k); else coeffs_[k] = c;
    }
    friend bool operator==(const TruncatedElement&, const TruncatedElement&) = default;

private:
    Filtration filt_;
    long n_;
    Map coeffs_;
};

// canonical truncation; domain error for non-integral x
TruncatedElement uTruncate(const PBWElement& x, Filtration filt, long n);
// exact preimage of a truncated element
PBWElement assembleTruncated(const TruncatedElement& t);

enum class Membership { IN, OUT, UNKNOWN };

struct IdealSpec {
    enum Kind { U1pow, U0kl, Un, UPrimeN, UenCentral } kind;
    long n = 0;  // level (U1pow, Un, UPrimeN, UenCentral)
    long k = 0, l = 0;  // U0kl parameters

    static IdealSpec u1pow(long n) { return {U1pow, n, 0, 0}; }
    static IdealSpec u0kl(long k, long l) { return {U0kl, 0, k, l}; }
    static IdealSpec un(long n) { return {Un, n, 0, 0}; }
    static IdealSpec uPrime(long n) { return {UPrimeN, n, 0, 0}; }
    static IdealSpec uenCentral(long n) { return {UenCentral, n, 0, 0}; }
};

// Exact for U1pow, U0kl and (on central inputs) UenCentral; a three-valued
// sandwich for Un and UPrimeN, where only generators and cofinal windows
// are available.
Membership idealMember(const PBWElement& x, const IdealSpec& ideal);

// torus-level membership in ({k}!, BB(H;l)); exact
bool torusInDoubleIdeal(const TorusElement& t, long k, long l);

// sigma-basis series over A, AHat or ADot: n -> (a_n, b_n) for
// sum (a_n + b_n C) sigma_n, coefficients canonical at the series precision
class CentralSeries {
public:
    using Map = std::map<long, std::pair<LaurentInt, LaurentInt>>;

    CentralSeries(ScalarRing ring, long precision) : ring_(ring), precision_(precision) {}

    static CentralSeries fromPoly(ScalarRing ring, long precision, const CentralPoly& p);

    ScalarRing ring() const { return ring_; }
    long precision() const { return precision_; }
    const Map& coeffs() const { return coeffs_; }
    void add(long n, const LaurentInt& a, const LaurentInt& b);
    friend bool operator==(const CentralSeries&, const CentralSeries&) = default;

private:
    ScalarRing ring_;
    long precision_;
    Map coeffs_;
};

// product via the sigma-basis convolution, with C^2 rewritten as
// sigma_1 + [2]^2; precision is the minimum of the factors'
CentralSeries centralSeriesMul(const CentralSeries& x, const CentralSeries& y);
CentralSeries centralSeriesAdd(const CentralSeries& x, const CentralSeries& y);

}  // namespace qsl2

#endif
