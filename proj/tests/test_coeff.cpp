#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsl2/completion.hpp"
#include "qsl2/qsymbols.hpp"

using namespace qsl2;

namespace {

// independent oracle: naive coefficient-wise Laurent division of BB(a;n) by
// {n}!, trying every quotient exponent window (no reuse of divExact)
LaurentInt naiveQuotient(const LaurentInt& num, const LaurentInt& den) {
    REQUIRE(!den.isZero());
    if (num.isZero()) return LaurentInt();
    // solve q * den = num by matching coefficients from the top
    LaurentInt q;
    LaurentInt rest = num;
    while (!rest.isZero()) {
        long e = rest.highExp() - den.highExp();
        Int c = rest.coeff(rest.highExp()) / den.leadCoeff();
        REQUIRE(c * den.leadCoeff() == rest.coeff(rest.highExp()));
        q.add(e, c);
        rest -= den.shifted(e) * LaurentInt(c);
    }
    return q;
}

}  // namespace

TEST_CASE("brace and bracket basics") {
    // {2} = v^2 - v^-2
    LaurentInt b2 = brace(2);
    CHECK(b2.coeff(2) == 1);
    CHECK(b2.coeff(-2) == -1);
    CHECK(b2.coeffs().size() == 2);
    CHECK(brace(0).isZero());
    CHECK(brace(-3) == -brace(3));

    // [2] = v + v^-1, [n] = {n}/{1}
    CHECK(bracket(2) == naiveQuotient(brace(2), brace(1)));
    for (long n = 0; n <= 10; ++n) CHECK(brace(1) * bracket(n) == brace(n));
    CHECK(bracket(-4) == -bracket(4));
}

TEST_CASE("factorials and the q-Pochhammer identity") {
    for (long n = 0; n <= 12; ++n) {
        // (q)_n = (-1)^n v^{n(n+1)/2} {n}!
        LaurentInt rhs = braceFactorial(n).shifted(n * (n + 1) / 2);
        if (n % 2 != 0) rhs = -rhs;
        CHECK(qPochhammer(n) == rhs);
        CHECK(braceFactorial(n) == brace(1).pow(n) * bracketFactorial(n));
    }
    CHECK_THROWS_AS(braceFactorial(-1), std::domain_error);
    CHECK_THROWS_AS(qPochhammer(-2), std::domain_error);
}

TEST_CASE("q-binomials: integrality and frozen small values") {
    CHECK(qBinomial(2, 1) == bracket(2));
    // bb(4;2) = [4][3]/([2][1]), expanded by the independent oracle
    LaurentInt expect = naiveQuotient(bracket(4) * bracket(3), bracket(2) * bracket(1));
    CHECK(qBinomial(4, 2) == expect);
    {
        LaurentInt frozen;  // v^4 + v^2 + 2 + v^-2 + v^-4
        frozen.add(4, 1); frozen.add(2, 1); frozen.add(0, 2); frozen.add(-2, 1); frozen.add(-4, 1);
        CHECK(qBinomial(4, 2) == frozen);
    }
    // integer tops, including negatives, always land in Z[v,v^-1]
    for (long a = -12; a <= 12; ++a)
        for (long n = 0; n <= 12; ++n)
            CHECK(qBinomialRat(a, n).isIntegral());
    // Pascal-type recursion bb(a;n) = v^n bb(a-1;n) + v^{n-a} bb(a-1;n-1)
    for (long a = -6; a <= 6; ++a)
        for (long n = 1; n <= 6; ++n)
            CHECK(qBinomial(a, n) ==
                  qBinomial(a - 1, n).shifted(n) + qBinomial(a - 1, n - 1).shifted(n - a));
}

TEST_CASE("qScalar entry point and domain errors") {
    CHECK(qScalar(QScalarKind::Brace, {2}).asLaurent() == brace(2));
    CHECK(qScalar(QScalarKind::QPoch, {2}).asLaurent() == qPochhammer(2));
    CHECK(qScalar(QScalarKind::Bb, {2, 1}).asLaurent() == bracket(2));
    CHECK(qScalar(QScalarKind::BB, {4, 2}).asLaurent() == brace(4) * brace(3));
    CHECK_THROWS_AS(qScalar(QScalarKind::BraceFact, {-1}), std::domain_error);
    CHECK_THROWS_AS(qScalar(QScalarKind::BracketFact, {-3}), std::domain_error);
}

TEST_CASE("balanced cyclotomic polynomials") {
    CHECK(balancedCyclo(1) == brace(1));   // v - v^-1
    CHECK(balancedCyclo(2) == bracket(2)); // v + v^-1
    {
        LaurentInt phi4;  // v^2 + v^-2
        phi4.add(2, 1); phi4.add(-2, 1);
        CHECK(balancedCyclo(4) == phi4);
    }
    CHECK_THROWS_AS(balancedCyclo(0), std::domain_error);
    // {n} = prod_{d | n} phi_d
    for (long n = 1; n <= 20; ++n) {
        LaurentInt prod(1);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= balancedCyclo(d);
        CHECK(prod == brace(n));
    }
}

TEST_CASE("cyclotomic profiles reconstruct exactly") {
    // {n}! = prod_d phi_d^{floor(n/d)} for n <= 30
    for (long n = 0; n <= 30; ++n)
        CHECK(CycloProfile::ofBraceFactorial(n).reconstruct() == braceFactorial(n));
    // {6}! exponents at d = 1..6
    auto p6 = CycloProfile::ofBraceFactorial(6);
    CHECK(p6.exponent(1) == 6);
    CHECK(p6.exponent(2) == 3);
    CHECK(p6.exponent(3) == 2);
    CHECK(p6.exponent(4) == 1);
    CHECK(p6.exponent(5) == 1);
    CHECK(p6.exponent(6) == 1);
    CHECK(p6.exponent(7) == 0);
    // {1} and bb(2;1) = [2] = phi_2
    CHECK(CycloProfile::ofBrace(1).exponents() == std::map<long, long>{{1, 1}});
    CHECK(CycloProfile::ofQBinomial(1, 1).exponents() == std::map<long, long>{{2, 1}});
    // binomial profiles: nonnegative and exact, 0 <= n <= m <= 12
    for (long m = 0; m <= 12; ++m)
        for (long n = 0; n <= m; ++n) {
            auto prof = CycloProfile::ofQBinomial(n, m - n);
            CHECK(prof.allNonNegative());
            CHECK(prof.reconstruct() == qBinomial(m, n));
        }
}

TEST_CASE("structural factorization descriptor") {
    // {6}! as a one-factor descriptor
    CHECK(cycloFactorize({{QScalarKind::BraceFact, {6}, 1}}) ==
          CycloProfile::ofBraceFactorial(6));
    // {3}!^2 {2} / {4}! reconstructs as an exact fraction
    auto prof = cycloFactorize({{QScalarKind::BraceFact, {3}, 2},
                                {QScalarKind::Brace, {2}, 1},
                                {QScalarKind::BraceFact, {4}, -1}});
    RatFunc expect(braceFactorial(3) * braceFactorial(3) * brace(2), braceFactorial(4));
    CHECK(prof.reconstructRat() == expect);
    // binomial descriptor bb(4;2)
    CHECK(cycloFactorize({{QScalarKind::Bb, {4, 2}, 1}}).reconstruct() == qBinomial(4, 2));
    CHECK_THROWS_AS(cycloFactorize({{QScalarKind::QPoch, {2}, 1}}), std::domain_error);
}

TEST_CASE("theta integrality and its valuation calculus") {
    // closed forms at degenerate corners, via exact rational arithmetic
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            CHECK(thetaLem16(a, b, 0, 0) == qBinomial(2 * a + b, a));
    CHECK(thetaLem16(1, 0, 1, 1) == bracket(3) * bracket(4));
    CHECK(thetaLem16(1, 1, 1, 1) == bracket(3) * bracket(3) * bracket(5));

    CHECK(thetaExponentD(1, 3, 2, 1, 4) == 0);  // floors are exact at d = 1
    CHECK(thetaExponentD(2, 1, 0, 1, 1) == 1);
    // exponents depend only on residues mod d
    CHECK(thetaExponentD(3, 4, 1, 2, 2) == thetaExponentD(3, 1, 1, 2, 2));

    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= 6; ++b)
            for (long x = 0; x <= 6; ++x)
                for (long y = 0; y <= 6; ++y) {
                    auto prof = thetaProfile(a, b, x, y);
                    for (long d = 1; d <= 14; ++d) CHECK(thetaExponentD(d, a, b, x, y) >= 0);
                    CHECK(prof.allNonNegative());
                    CHECK(prof.reconstruct() == thetaLem16(a, b, x, y));
                }
}

TEST_CASE("ratfunc normalization is canonical") {
    // {2}/{1} = [2]
    CHECK(RatFunc(brace(2), brace(1)) == RatFunc(bracket(2)));
    CHECK(RatFunc(LaurentInt(), brace(3)) == RatFunc());
    // (v^2-1)/(v-1) = v+1
    LaurentInt v2m1; v2m1.add(2, 1); v2m1.add(0, -1);
    LaurentInt vm1; vm1.add(1, 1); vm1.add(0, -1);
    LaurentInt vp1; vp1.add(1, 1); vp1.add(0, 1);
    CHECK(RatFunc(v2m1, vm1) == RatFunc(vp1));
    CHECK_THROWS_AS(RatFunc(vp1, LaurentInt()), std::domain_error);
    // idempotence and sign convention
    RatFunc r(brace(3), -brace(2));
    CHECK(r.den().lowExp() == 0);
    CHECK(r.den().leadCoeff() > 0);
    CHECK(RatFunc(r.num(), r.den()) == r);
    // integrality predicate
    CHECK(RatFunc(brace(2), brace(1)).isIntegral());
    CHECK(!RatFunc(brace(1), brace(2)).isIntegral());
    CHECK(RatFunc(brace(2).shifted(-5), LaurentInt::power(3)).isIntegral());
}

TEST_CASE("divExact") {
    CHECK(*divExact(brace(2), brace(1)) == bracket(2));
    CHECK(!divExact(brace(3), brace(2)).has_value());
    CHECK(*divExact(LaurentInt(), brace(2)) == LaurentInt());
    CHECK_THROWS_AS(divExact(brace(2), LaurentInt()), std::domain_error);
    for (long n = 1; n <= 8; ++n)
        CHECK(*divExact(braceFactorial(n), braceFactorial(n - 1)) == brace(n));
}

TEST_CASE("scalar identity: product form of BB via alternating binomial sum") {
    // BB(a;r) = sum_j (-1)^j v^{(r-2j)(-r+1+2a)/2} bb(r;j) for integer a
    for (long a = -4; a <= 4; ++a)
        for (long r = 0; r <= 6; ++r) {
            LaurentInt sum;
            for (long j = 0; j <= r; ++j) {
                long num = (r - 2 * j) * (-r + 1 + 2 * a);
                REQUIRE(num % 2 == 0);
                LaurentInt term = qBinomial(r, j).shifted(num / 2);
                if (j % 2 != 0) term = -term;
                sum += term;
            }
            CHECK(sum == braceProduct(a, r));
        }
}

TEST_CASE("scalar identities: telescoping binomial sums") {
    // sum_{i=j..m} (-1)^i v^{i(j-m)} bb(i;j) bb(m+1;i+1) = (-1)^j v^{m-j}
    for (long m = 0; m <= 8; ++m)
        for (long j = 0; j <= m; ++j) {
            LaurentInt sum;
            for (long i = j; i <= m; ++i) {
                LaurentInt term = (qBinomial(i, j) * qBinomial(m + 1, i + 1)).shifted(i * (j - m));
                if (i % 2 != 0) term = -term;
                sum += term;
            }
            LaurentInt expect = LaurentInt::power(m - j);
            if (j % 2 != 0) expect = -expect;
            CHECK(sum == expect);
        }
    // sum_{i=k..l} (-1)^i v^{i(k-l)} bb(i-1;k-1) bb(l;i) = (-1)^k
    for (long l = 1; l <= 8; ++l)
        for (long k = 1; k <= l; ++k) {
            LaurentInt sum;
            for (long i = k; i <= l; ++i) {
                LaurentInt term = (qBinomial(i - 1, k - 1) * qBinomial(l, i)).shifted(i * (k - l));
                if (i % 2 != 0) term = -term;
                sum += term;
            }
            LaurentInt expect(1);
            if (k % 2 != 0) expect = -expect;
            CHECK(sum == expect);
        }
}

TEST_CASE("scalar approximations reduce canonically") {
    CHECK(scalarReduce(ScalarRing::AHat, braceFactorial(3), 3).rep.isZero());
    CHECK(scalarReduce(ScalarRing::ADot, (brace(1) * LaurentInt::power(1)).pow(3), 3).rep.isZero());
    // v^5 mod {2}!: already inside the window [0, 5]
    auto r = scalarReduce(ScalarRing::AHat, LaurentInt::power(5), 2);
    CHECK(r.rep == LaurentInt::power(5));
    // canonical window and homomorphism property at fixed precision
    LaurentInt x = brace(3) * brace(2) + LaurentInt(7);
    LaurentInt y = brace(5) - LaurentInt::power(-4);
    for (long n = 1; n <= 4; ++n) {
        auto rx = scalarReduce(ScalarRing::AHat, x, n);
        auto ry = scalarReduce(ScalarRing::AHat, y, n);
        long deg = scalarModulus(ScalarRing::AHat, n).highExp();
        if (!rx.rep.isZero()) {
            CHECK(rx.rep.lowExp() >= 0);
            CHECK(rx.rep.highExp() < deg);
        }
        CHECK(scalarReduce(ScalarRing::AHat, x * y, n).rep ==
              scalarReduce(ScalarRing::AHat, rx.rep * ry.rep, n).rep);
        CHECK(scalarReduce(ScalarRing::AHat, x + y, n).rep ==
              scalarReduce(ScalarRing::AHat, rx.rep + ry.rep, n).rep);
        CHECK(scalarReduce(ScalarRing::AHat, rx.rep, n) == rx);  // idempotent
    }
    // {n}!-divisibility matches the exact test
    CHECK(scalarReduce(ScalarRing::AHat, braceFactorial(4), 4).rep.isZero());
    CHECK(!scalarReduce(ScalarRing::AHat, braceFactorial(3), 4).rep.isZero());
}
