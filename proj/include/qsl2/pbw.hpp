#ifndef QSL2_PBW_HPP
#define QSL2_PBW_HPP

#include <compare>
#include <optional>
#include <vector>

#include "qsl2/torus.hpp"

namespace qsl2 {

// F^(f) K^k e^e with f, e >= 0
struct PBWMonomial {
    long f = 0;
    long k = 0;
    long e = 0;

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    // storage order: lexicographic in (f, e, k); printed in reverse
    friend auto operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
        if (auto c = a.f <=> b.f; c != 0) return c;
        if (auto c = a.e <=> b.e; c != 0) return c;
        return a.k <=> b.k;
    }
};

// Finite sums of PBW monomials with normalized rational coefficients. The
// element lies in the integral form exactly when every coefficient does.
class PBWElement {
public:
    using Map = std::map<PBWMonomial, RatFunc>;

    PBWElement() = default;
    PBWElement(const RatFunc& scalar) { if (!scalar.isZero()) coeffs_[PBWMonomial{}] = scalar; }
    PBWElement(long n) : PBWElement(RatFunc(n)) {}

    static PBWElement monomial(long f, long k, long e, const RatFunc& c = RatFunc(1)) {
        if (f < 0 || e < 0) throw std::domain_error("pbw: negative divided power");
        PBWElement r;
        if (!c.isZero()) r.coeffs_[PBWMonomial{f, k, e}] = c;
        return r;
    }
    static PBWElement genE() { return monomial(0, 0, 1); }
    static PBWElement genF(long n) { return monomial(n, 0, 0); }
    static PBWElement genK(long b) { return monomial(0, b, 0); }
    static PBWElement fromTorus(const TorusElement& t) {
        PBWElement r;
        for (auto& [p, c] : t.coeffs()) r.coeffs_[PBWMonomial{0, p, 0}] = c;
        return r;
    }
    // F^(f) * t * e^e
    static PBWElement sandwich(long f, const TorusElement& t, long e, const RatFunc& scale = RatFunc(1));

    bool isZero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }
    RatFunc coeff(const PBWMonomial& m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? RatFunc() : it->second;
    }
    size_t termCount() const { return coeffs_.size(); }

    void add(const PBWMonomial& m, const RatFunc& c) {
        if (c.isZero()) return;
        auto [it, inserted] = coeffs_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) coeffs_.erase(it);
        }
    }

    PBWElement operator-() const {
        PBWElement r;
        for (auto& [m, c] : coeffs_) r.coeffs_[m] = -c;
        return r;
    }
    PBWElement& operator+=(const PBWElement& o) {
        for (auto& [m, c] : o.coeffs_) add(m, c);
        return *this;
    }
    PBWElement& operator-=(const PBWElement& o) {
        for (auto& [m, c] : o.coeffs_) add(m, -c);
        return *this;
    }
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { a += b; return a; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { a -= b; return a; }
    friend PBWElement operator*(const RatFunc& c, const PBWElement& x) {
        PBWElement r;
        for (auto& [m, xc] : x.coeffs_) r.add(m, c * xc);
        return r;
    }

    friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    bool isIntegral() const {
        for (auto& [m, c] : coeffs_) { (void)m; if (!c.isIntegral()) return false; }
        return true;
    }

    // the torus parts t_{a,m} of x = sum F^(a) t_{a,m} e^m
    std::map<std::pair<long, long>, TorusElement> torusParts() const;

private:
    Map coeffs_;
};

// product in PBW normal form, straightening e^m F^(n) by the closed form
PBWElement mul(const PBWElement& x, const PBWElement& y);
PBWElement mulMany(const std::vector<PBWElement>& xs);
PBWElement pbwPow(const PBWElement& x, long n);

// word atoms over the presentation generators
struct WordAtom {
    enum Tag { K, Kinv, E, F } tag;
    long n = 0;  // divided power index for F
    static WordAtom k() { return {K, 0}; }
    static WordAtom kinv() { return {Kinv, 0}; }
    static WordAtom e() { return {E, 0}; }
    static WordAtom fdiv(long n) { return {F, n}; }
    friend bool operator==(const WordAtom&, const WordAtom&) = default;
    friend auto operator<=>(const WordAtom&, const WordAtom&) = default;
};
using Word = std::vector<WordAtom>;

// Normal form computed with only the primitive defining relations
// (K-commutations, divided-power merge, the single straightening step).
// Serves as the independent oracle for mul.
PBWElement normalizeWord(const Word& word);

enum class Grading { Z, K2, V2 };
// split into homogeneous parts; keys are degrees (Z) or parities (K2, V2)
std::map<long, PBWElement> gradeDecompose(const PBWElement& x, Grading g);

// nullopt when integral, else the first offending monomial in storage order
std::optional<PBWMonomial> integralityWitnessMonomial(const PBWElement& x);

// dense matrices over Q(v) for the small irreducible representations
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RMatrix identity(size_t n) {
        RMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
        return m;
    }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    RatFunc& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const RatFunc& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    bool isZero() const {
        for (auto& x : a_) if (!x.isZero()) return false;
        return true;
    }
    friend RMatrix operator*(const RMatrix& x, const RMatrix& y) {
        if (x.cols_ != y.rows_) throw std::domain_error("matrix: shape mismatch");
        RMatrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t l = 0; l < x.cols_; ++l) {
                if (x.at(i, l).isZero()) continue;
                for (size_t j = 0; j < y.cols_; ++j)
                    r.at(i, j) += x.at(i, l) * y.at(l, j);
            }
        return r;
    }
    friend RMatrix operator+(RMatrix x, const RMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::domain_error("matrix: shape mismatch");
        for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend RMatrix operator*(const RatFunc& c, RMatrix x) {
        for (auto& v : x.a_) v *= c;
        return x;
    }
    friend bool operator==(const RMatrix&, const RMatrix&) = default;
    RMatrix pow(long n) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<RatFunc> a_;
};

// matrix of x on the i-dimensional irreducible module V^sign_i, realized on
// the basis u_j = F^(j) u_0 with K u_0 = sign v^{i-1} u_0 and e u_0 = 0
RMatrix irrepAction(int sign, long i, const PBWElement& x);

}  // namespace qsl2

#endif
