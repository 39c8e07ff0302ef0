#ifndef QSL2_QSYMBOLS_HPP
#define QSL2_QSYMBOLS_HPP

#include <map>
#include <vector>

#include "qsl2/ratfunc.hpp"

namespace qsl2 {

// {a} = v^a - v^-a
LaurentInt brace(long a);
// [a] = {a}/{1}
LaurentInt bracket(long a);
// {n}! = {1}{2}...{n},  n >= 0
LaurentInt braceFactorial(long n);
// [n]!
LaurentInt bracketFactorial(long n);
// (q)_n = (1-q)(1-q^2)...(1-q^n) with q = v^2
LaurentInt qPochhammer(long n);
// BB(a;n) = {a}{a-1}...{a-n+1} for integer a, n >= 0
LaurentInt braceProduct(long a, long n);
// bb(a;n) = BB(a;n)/{n}! as a normalized fraction
RatFunc qBinomialRat(long a, long n);
// bb(a;n), asserting the value lies in Z[v,v^-1]
LaurentInt qBinomial(long a, long n);

enum class QScalarKind { Brace, Bracket, BraceFact, BracketFact, QPoch, BB, Bb };
// uniform entry point; BB/Bb take (args[0]; args[1])
RatFunc qScalar(QScalarKind kind, const std::vector<long>& args);

// balanced cyclotomic polynomial phi_d = v^{-deg Phi_d(q)} Phi_d(q), q = v^2
LaurentInt balancedCyclo(long d);

// Valuations at the balanced cyclotomics phi_d. Products add exponents;
// structural factorizations avoid any polynomial factoring.
class CycloProfile {
public:
    CycloProfile() = default;

    static CycloProfile ofBrace(long n);          // {n}, n >= 1
    static CycloProfile ofBraceFactorial(long n); // {n}!: exponent of phi_d is floor(n/d)
    static CycloProfile ofQBinomial(long m, long n); // bb(m+n;m) given top m+n >= bottom m >= 0

    long exponent(long d) const {
        auto it = exps_.find(d);
        return it == exps_.end() ? 0 : it->second;
    }
    const std::map<long, long>& exponents() const { return exps_; }
    void add(long d, long e) {
        if (e == 0) return;
        auto [it, inserted] = exps_.emplace(d, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) exps_.erase(it);
        }
    }
    CycloProfile& operator*=(const CycloProfile& o) {
        for (auto& [d, e] : o.exps_) add(d, e);
        return *this;
    }
    CycloProfile powAdded(long k) const {
        CycloProfile r;
        for (auto& [d, e] : exps_) r.add(d, e * k);
        return r;
    }
    bool allNonNegative() const {
        for (auto& [d, e] : exps_) { (void)d; if (e < 0) return false; }
        return true;
    }
    // prod phi_d^{e_d} as an exact fraction
    RatFunc reconstructRat() const;
    // same, asserting all exponents nonnegative
    LaurentInt reconstruct() const;

    friend bool operator==(const CycloProfile& a, const CycloProfile& b) { return a.exps_ == b.exps_; }

private:
    std::map<long, long> exps_;
};

// one structural factor of a cyclotomic-valuation computation
struct CycloFactor {
    QScalarKind kind;        // Brace, BraceFact or Bb
    std::vector<long> args;  // as in qScalar
    long multiplicity = 1;   // may be negative (denominator factors)
};

// valuation profile of a structural product of brace symbols; reconstructing
// prod phi_d^{e_d} recovers the exact value
CycloProfile cycloFactorize(const std::vector<CycloFactor>& factors);

// theta(a,b,x,y) = psi(a,x,y) bb(x+y;x) bb(b+x+y;b) bb(2a+b+x+y;a) with
// psi(a,x,y) = {a+x+y}!{a}!/({a+x}!{a+y}!); the value lies in Z[v,v^-1].
LaurentInt thetaLem16(long a, long b, long x, long y);

// phi_d-valuation of theta via the floor formulas; depends only on residues mod d
long thetaExponentD(long d, long a, long b, long x, long y);
// the full profile (d ranges over 1..2a+b+x+y, past which every exponent is 0)
CycloProfile thetaProfile(long a, long b, long x, long y);

}  // namespace qsl2

#endif
