#include "qsl2/pbw.hpp"

namespace qsl2 {

PBWElement PBWElement::sandwich(long f, const TorusElement& t, long e, const RatFunc& scale) {
    if (f < 0 || e < 0) throw std::domain_error("pbw: negative divided power");
    PBWElement r;
    for (auto& [p, c] : t.coeffs()) r.add(PBWMonomial{f, p, e}, scale * c);
    return r;
}

std::map<std::pair<long, long>, TorusElement> PBWElement::torusParts() const {
    std::map<std::pair<long, long>, TorusElement> out;
    for (auto& [m, c] : coeffs_) out[{m.f, m.e}].add(m.k, c);
    return out;
}

namespace {

// (F^(a1) K^b1 e^m1)(F^(a2) K^b2 e^m2) straightened via
// e^m F^(n) = sum_p bb(m;p) F^(n-p) BB(H-m-n+2p;p) e^(m-p)
PBWElement mulMonomials(const PBWMonomial& x, const PBWMonomial& y, const RatFunc& coeff) {
    PBWElement out;
    const long a1 = x.f, b1 = x.k, m1 = x.e;
    const long a2 = y.f, b2 = y.k, m2 = y.e;
    const long pmax = std::min(m1, a2);
    for (long p = 0; p <= pmax; ++p) {
        const long A2 = a2 - p;       // surviving right F-power
        const long M = m1 - p;        // surviving left e-power
        const long A = a1 + A2;
        // scalar: binomials and the K-commutation twists
        RatFunc c = coeff * qBinomialRat(m1, p) * qBinomialRat(A, a1) *
                    RatFunc(LaurentInt::power(-2 * b1 * A2 - 2 * M * b2));
        if (c.isZero()) continue;
        TorusElement t = makeBraceH(-m1 - a2 + 2 * p, p);
        out += PBWElement::sandwich(A, t * TorusElement::kPower(b1 + b2), M + m2, c);
    }
    return out;
}

}  // namespace

PBWElement mul(const PBWElement& x, const PBWElement& y) {
    PBWElement r;
    for (auto& [mx, cx] : x.coeffs())
        for (auto& [my, cy] : y.coeffs())
            r += mulMonomials(mx, my, cx * cy);
    return r;
}

PBWElement mulMany(const std::vector<PBWElement>& xs) {
    PBWElement r(1);
    for (auto& x : xs) r = mul(r, x);
    return r;
}

PBWElement pbwPow(const PBWElement& x, long n) {
    if (n < 0) throw std::domain_error("pbw: negative power");
    PBWElement r(1);
    for (long i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

namespace {

struct PendingWord {
    Word w;
    friend auto operator<=>(const PendingWord&, const PendingWord&) = default;
};

// first out-of-order adjacent pair, or npos when the word is normal
size_t firstRedex(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        const WordAtom &a = w[i], &b = w[i + 1];
        if ((a.tag == WordAtom::K && b.tag == WordAtom::Kinv) ||
            (a.tag == WordAtom::Kinv && b.tag == WordAtom::K))
            return i;
        if (a.tag == WordAtom::F && b.tag == WordAtom::F) return i;
        if (a.tag == WordAtom::E &&
            (b.tag == WordAtom::F || b.tag == WordAtom::K || b.tag == WordAtom::Kinv))
            return i;
        if ((a.tag == WordAtom::K || a.tag == WordAtom::Kinv) && b.tag == WordAtom::F) return i;
    }
    return static_cast<size_t>(-1);
}

Word spliced(const Word& w, size_t i, std::initializer_list<WordAtom> repl) {
    Word r(w.begin(), w.begin() + i);
    r.insert(r.end(), repl);
    r.insert(r.end(), w.begin() + i + 2, w.end());
    return r;
}

PBWMonomial normalWordToMonomial(const Word& w) {
    PBWMonomial m;
    for (auto& a : w) {
        switch (a.tag) {
            case WordAtom::F: m.f += a.n; break;
            case WordAtom::K: m.k += 1; break;
            case WordAtom::Kinv: m.k -= 1; break;
            case WordAtom::E: m.e += 1; break;
        }
    }
    return m;
}

}  // namespace

PBWElement normalizeWord(const Word& word) {
    std::map<Word, RatFunc> active;
    active[word] = RatFunc(1);
    PBWElement out;
    while (!active.empty()) {
        auto it = active.begin();
        Word w = it->first;
        RatFunc c = it->second;
        active.erase(it);
        if (c.isZero()) continue;
        size_t i = firstRedex(w);
        if (i == static_cast<size_t>(-1)) {
            out.add(normalWordToMonomial(w), c);
            continue;
        }
        auto push = [&](Word nw, const RatFunc& nc) {
            if (nc.isZero()) return;
            auto [jt, inserted] = active.emplace(std::move(nw), nc);
            if (!inserted) {
                jt->second += nc;
                if (jt->second.isZero()) active.erase(jt);
            }
        };
        const WordAtom a = w[i], b = w[i + 1];
        if ((a.tag == WordAtom::K && b.tag == WordAtom::Kinv) ||
            (a.tag == WordAtom::Kinv && b.tag == WordAtom::K)) {
            push(spliced(w, i, {}), c);
        } else if (a.tag == WordAtom::F && b.tag == WordAtom::F) {
            // F^(m)F^(n) = bb(m+n;m) F^(m+n)
            push(spliced(w, i, {WordAtom::fdiv(a.n + b.n)}), c * qBinomialRat(a.n + b.n, a.n));
        } else if (a.tag == WordAtom::E && b.tag == WordAtom::F) {
            // e F^(n) = F^(n) e + F^(n-1)(v^{-n+1} K - v^{n-1} K^-1)
            const long n = b.n;
            push(spliced(w, i, {b, a}), c);
            if (n == 1) {
                push(spliced(w, i, {WordAtom::k()}), c * RatFunc(LaurentInt::power(-n + 1)));
                push(spliced(w, i, {WordAtom::kinv()}), -(c * RatFunc(LaurentInt::power(n - 1))));
            } else {
                push(spliced(w, i, {WordAtom::fdiv(n - 1), WordAtom::k()}),
                     c * RatFunc(LaurentInt::power(-n + 1)));
                push(spliced(w, i, {WordAtom::fdiv(n - 1), WordAtom::kinv()}),
                     -(c * RatFunc(LaurentInt::power(n - 1))));
            }
        } else if (a.tag == WordAtom::E && b.tag == WordAtom::K) {
            push(spliced(w, i, {b, a}), c * RatFunc(LaurentInt::power(-2)));
        } else if (a.tag == WordAtom::E && b.tag == WordAtom::Kinv) {
            push(spliced(w, i, {b, a}), c * RatFunc(LaurentInt::power(2)));
        } else if (a.tag == WordAtom::K && b.tag == WordAtom::F) {
            push(spliced(w, i, {b, a}), c * RatFunc(LaurentInt::power(-2 * b.n)));
        } else if (a.tag == WordAtom::Kinv && b.tag == WordAtom::F) {
            push(spliced(w, i, {b, a}), c * RatFunc(LaurentInt::power(2 * b.n)));
        } else {
            throw std::logic_error("normalizeWord: unhandled redex");
        }
    }
    return out;
}

std::map<long, PBWElement> gradeDecompose(const PBWElement& x, Grading g) {
    std::map<long, PBWElement> out;
    for (auto& [m, c] : x.coeffs()) {
        switch (g) {
            case Grading::Z:
                out[m.e - m.f].add(m, c);
                break;
            case Grading::K2:
                out[((m.f + m.k) % 2 + 2) % 2].add(m, c);
                break;
            case Grading::V2: {
                auto [ev, od] = c.evenOddSplit();
                long shift = (m.f * (m.f - 1) / 2) % 2;
                if (!ev.isZero()) out[shift].add(m, ev);
                if (!od.isZero()) out[1 - shift].add(m, od);
                break;
            }
        }
    }
    return out;
}

std::optional<PBWMonomial> integralityWitnessMonomial(const PBWElement& x) {
    for (auto& [m, c] : x.coeffs())
        if (!c.isIntegral()) return m;
    return std::nullopt;
}

RMatrix RMatrix::pow(long n) const {
    if (rows_ != cols_) throw std::domain_error("matrix: pow of non-square");
    if (n < 0) throw std::domain_error("matrix: negative power unsupported here");
    RMatrix r = identity(rows_);
    for (long i = 0; i < n; ++i) r = r * *this;
    return r;
}

namespace {

RMatrix irrepK(int sign, long i, long b) {
    RMatrix m(i, i);
    for (long j = 0; j < i; ++j) {
        RatFunc val(LaurentInt::power(b * (i - 1 - 2 * j)));
        if (sign < 0 && (b % 2 != 0)) val = -val;
        m.at(j, j) = val;
    }
    return m;
}

RMatrix irrepE(int sign, long i) {
    // e u_j = sign {i-j} u_{j-1}
    RMatrix m(i, i);
    for (long j = 1; j < i; ++j) {
        RatFunc val(brace(i - j));
        if (sign < 0) val = -val;
        m.at(j - 1, j) = val;
    }
    return m;
}

RMatrix irrepF(long i, long n) {
    // F^(n) u_j = bb(n+j;n) u_{n+j}
    RMatrix m(i, i);
    for (long j = 0; j + n < i; ++j) m.at(j + n, j) = RatFunc(qBinomial(n + j, n));
    return m;
}

}  // namespace

RMatrix irrepAction(int sign, long i, const PBWElement& x) {
    if (i < 1) throw std::domain_error("irrepAction: dimension < 1");
    if (sign != 1 && sign != -1) throw std::domain_error("irrepAction: sign must be +-1");
    RMatrix acc(i, i);
    for (auto& [m, c] : x.coeffs()) {
        RMatrix term = RMatrix::identity(i);
        if (m.f > 0) term = irrepF(i, m.f);
        if (m.k != 0) term = term * irrepK(sign, i, m.k);
        if (m.e > 0) term = term * irrepE(sign, i).pow(m.e);
        acc = acc + c * term;
    }
    return acc;
}

}  // namespace qsl2
