#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsl2/pbw.hpp"

using namespace qsl2;

namespace {

PBWElement randomIntegral(std::mt19937_64& rng, long maxF = 3, long maxK = 2, long maxE = 3,
                          int terms = 3) {
    std::uniform_int_distribution<long> fd(0, maxF), kd(-maxK, maxK), ed(0, maxE);
    std::uniform_int_distribution<long> cd(-4, 4), xd(-3, 3);
    PBWElement x;
    for (int i = 0; i < terms; ++i)
        x.add(PBWMonomial{fd(rng), kd(rng), ed(rng)}, RatFunc(LaurentInt::monomial(cd(rng), xd(rng))));
    return x;
}

Word wordEPow(long m) { return Word(m, WordAtom::e()); }

}  // namespace

TEST_CASE("primitive relations through the rewriter") {
    // e F^(1) = F^(1) e + K - K^-1
    PBWElement r = normalizeWord({WordAtom::e(), WordAtom::fdiv(1)});
    PBWElement expect = PBWElement::monomial(1, 0, 1);
    expect.add(PBWMonomial{0, 1, 0}, RatFunc(1));
    expect.add(PBWMonomial{0, -1, 0}, RatFunc(-1));
    CHECK(r == expect);
    // K K^-1 = 1
    CHECK(normalizeWord({WordAtom::k(), WordAtom::kinv()}) == PBWElement(1));
    // F^(1) F^(2) = [3] F^(3)
    CHECK(normalizeWord({WordAtom::fdiv(1), WordAtom::fdiv(2)}) ==
          RatFunc(bracket(3)) * PBWElement::genF(3));
}

TEST_CASE("closed-form product on worked small cases") {
    // e * F^(1)
    PBWElement ef = mul(PBWElement::genE(), PBWElement::genF(1));
    CHECK(ef == normalizeWord({WordAtom::e(), WordAtom::fdiv(1)}));
    // K e = v^2 e K as products
    CHECK(mul(PBWElement::genK(1), PBWElement::genE()) ==
          RatFunc(LaurentInt::power(2)) * mul(PBWElement::genE(), PBWElement::genK(1)));
    // e^2 F^(2) = F^(2)e^2 + [2] F^(1){H-2} e + {H}{H-1}
    PBWElement lhs = mul(pbwPow(PBWElement::genE(), 2), PBWElement::genF(2));
    PBWElement rhs = PBWElement::monomial(2, 0, 2);
    rhs += PBWElement::sandwich(1, RatFunc(bracket(2)) * makeBraceH(-2, 1), 1);
    rhs += PBWElement::fromTorus(makeBraceH(0, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("straightening: rewriter agrees with the closed form") {
    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n <= 6; ++n) {
            Word w = wordEPow(m);
            if (n > 0) w.push_back(WordAtom::fdiv(n));
            PBWElement viaRules = normalizeWord(w);
            // sum_p bb(m;p) F^(n-p) BB(H-m-n+2p;p) e^(m-p)
            PBWElement closed;
            for (long p = 0; p <= std::min(m, n); ++p)
                closed += PBWElement::sandwich(n - p, RatFunc(qBinomial(m, p)) * makeBraceH(-m - n + 2 * p, p),
                                               m - p);
            CHECK(viaRules == closed);
            CHECK(mul(pbwPow(PBWElement::genE(), m), PBWElement::genF(n)) == closed);
        }
}

TEST_CASE("rewriter and closed-form product agree on all short words") {
    const std::vector<WordAtom> alphabet = {WordAtom::k(), WordAtom::kinv(), WordAtom::e(),
                                            WordAtom::fdiv(1), WordAtom::fdiv(2), WordAtom::fdiv(3)};
    const std::vector<PBWElement> atoms = {PBWElement::genK(1), PBWElement::genK(-1),
                                           PBWElement::genE(), PBWElement::genF(1),
                                           PBWElement::genF(2), PBWElement::genF(3)};
    // exhaustive over length <= 3, sampled at length 4..5
    std::mt19937_64 rng(23);
    long checked = 0;
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b)
            for (size_t c = 0; c < 6; ++c) {
                Word w = {alphabet[a], alphabet[b], alphabet[c]};
                PBWElement direct = mul(mul(atoms[a], atoms[b]), atoms[c]);
                CHECK(normalizeWord(w) == direct);
                ++checked;
            }
    std::uniform_int_distribution<size_t> pick(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        size_t len = 4 + (trial % 2);
        Word w;
        PBWElement direct(1);
        for (size_t i = 0; i < len; ++i) {
            size_t j = pick(rng);
            w.push_back(alphabet[j]);
            direct = mul(direct, atoms[j]);
        }
        CHECK(normalizeWord(w) == direct);
        ++checked;
    }
    CHECK(checked == 216 + 200);
}

TEST_CASE("associativity and integrality closure") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        PBWElement x = randomIntegral(rng), y = randomIntegral(rng), z = randomIntegral(rng);
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        CHECK(mul(x, y).isIntegral());
    }
}

TEST_CASE("torus elements commute across homogeneous elements by shift") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> kd(-4, 4), cd(-3, 3), fd(0, 3), ed(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        TorusElement t;
        for (int i = 0; i < 3; ++i) t.add(kd(rng), RatFunc(LaurentInt::monomial(cd(rng), cd(rng))));
        long a = fd(rng), m = ed(rng), b = kd(rng);
        PBWElement x = PBWElement::monomial(a, b, m);
        long deg = m - a;
        CHECK(mul(PBWElement::fromTorus(t), x) ==
              mul(x, PBWElement::fromTorus(gammaShift(2 * deg, t))));
    }
}

TEST_CASE("gradings") {
    // Z-degree of a monomial is e - f
    PBWElement x = PBWElement::monomial(2, 1, 3);
    auto gz = gradeDecompose(x, Grading::Z);
    REQUIRE(gz.size() == 1);
    CHECK(gz.begin()->first == 1);
    // K e is odd in the K-grading, e and F^(1)K are even
    CHECK(gradeDecompose(mul(PBWElement::genK(1), PBWElement::genE()), Grading::K2).begin()->first == 1);
    CHECK(gradeDecompose(PBWElement::genE(), Grading::K2).begin()->first == 0);
    CHECK(gradeDecompose(mul(PBWElement::genF(1), PBWElement::genK(1)), Grading::K2).begin()->first == 0);
    // F^(1) is even in the v-grading, F^(2) and vK are odd
    CHECK(gradeDecompose(PBWElement::genF(1), Grading::V2).begin()->first == 0);
    CHECK(gradeDecompose(PBWElement::genF(2), Grading::V2).begin()->first == 1);
    CHECK(gradeDecompose(RatFunc(LaurentInt::power(1)) * PBWElement::genK(1), Grading::V2)
              .begin()->first == 1);
    // e = (v - v^-1) E is even
    CHECK(gradeDecompose(PBWElement::genE(), Grading::V2).begin()->first == 0);

    // decompositions sum back to the element, parts are homogeneous,
    // and all three gradings are multiplicative
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        PBWElement a = randomIntegral(rng), b = randomIntegral(rng);
        for (auto g : {Grading::Z, Grading::K2, Grading::V2}) {
            PBWElement sum;
            for (auto& [d, part] : gradeDecompose(a, g)) {
                sum += part;
                auto inner = gradeDecompose(part, g);
                CHECK(inner.size() <= 1);
            }
            CHECK(sum == a);
            // grade(xy) is the convolution of grades
            auto ga = gradeDecompose(a, g), gb = gradeDecompose(b, g);
            std::map<long, PBWElement> conv;
            for (auto& [da, pa] : ga)
                for (auto& [db, pb] : gb) {
                    long d = (g == Grading::Z) ? da + db : (da + db) % 2;
                    conv[d] += mul(pa, pb);
                }
            for (auto it = conv.begin(); it != conv.end();)
                it = it->second.isZero() ? conv.erase(it) : std::next(it);
            auto gm = gradeDecompose(mul(a, b), g);
            CHECK(gm == conv);
        }
    }
}

TEST_CASE("integrality witness") {
    PBWElement c = PBWElement::monomial(1, 0, 1, RatFunc(brace(1)));
    c.add(PBWMonomial{0, 1, 0}, RatFunc(LaurentInt::power(1)));
    c.add(PBWMonomial{0, -1, 0}, RatFunc(LaurentInt::power(-1)));
    CHECK(!integralityWitnessMonomial(c).has_value());
    CHECK(!integralityWitnessMonomial(PBWElement::genF(3)).has_value());
    // E = {1}^-1 e
    PBWElement bigE = RatFunc::inverseOf(brace(1)) * PBWElement::genE();
    auto w = integralityWitnessMonomial(bigE);
    REQUIRE(w.has_value());
    CHECK(*w == PBWMonomial{0, 0, 1});
}

TEST_CASE("irreducible representations") {
    // defining relations hold as matrix identities
    for (int sign : {1, -1})
        for (long i = 1; i <= 6; ++i) {
            RMatrix K = irrepAction(sign, i, PBWElement::genK(1));
            RMatrix Kinv = irrepAction(sign, i, PBWElement::genK(-1));
            RMatrix E = irrepAction(sign, i, PBWElement::genE());
            RMatrix F = irrepAction(sign, i, PBWElement::genF(1));
            CHECK(K * Kinv == RMatrix::identity(i));
            CHECK(K * E == RatFunc(LaurentInt::power(2)) * (E * K));
            CHECK(K * F == RatFunc(LaurentInt::power(-2)) * (F * K));
            // e F^(1) - F^(1) e = K - K^-1
            RMatrix lhs = E * F + RatFunc(-1) * (F * E);
            RMatrix rhs = K + RatFunc(-1) * Kinv;
            CHECK(lhs == rhs);
            for (long n = 1; n + 1 < i; ++n)
                CHECK(irrepAction(sign, i, PBWElement::genF(1)) *
                          irrepAction(sign, i, PBWElement::genF(n)) ==
                      RatFunc(bracket(n + 1)) * irrepAction(sign, i, PBWElement::genF(n + 1)));
        }
    // highest weight: K u_0 = sign v^{i-1} u_0
    for (int sign : {1, -1})
        for (long i = 1; i <= 6; ++i) {
            RMatrix K = irrepAction(sign, i, PBWElement::genK(1));
            RatFunc expect(LaurentInt::power(i - 1));
            if (sign < 0) expect = -expect;
            CHECK(K.at(0, 0) == expect);
        }
    // multiplicative in x
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        PBWElement x = randomIntegral(rng, 2, 2, 2), y = randomIntegral(rng, 2, 2, 2);
        for (long i = 1; i <= 5; ++i)
            CHECK(irrepAction(1, i, mul(x, y)) == irrepAction(1, i, x) * irrepAction(1, i, y));
    }
}
