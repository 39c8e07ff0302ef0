#include "qsl2/textio.hpp"

#include <cctype>
#include <sstream>

namespace qsl2 {

namespace {

struct Token {
    enum Kind { Ident, Integer, LParen, RParen, Comma, Caret, Star, Plus, Minus, End } kind;
    std::string text;
    long value = 0;
    size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), 0, start});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Token t{Token::Integer, s.substr(i, j - i), 0, start};
            t.value = std::stol(t.text);
            i = j;
            out.push_back(t);
        } else {
            Token::Kind k;
            switch (c) {
                case '(': k = Token::LParen; break;
                case ')': k = Token::RParen; break;
                case ',': k = Token::Comma; break;
                case '^': k = Token::Caret; break;
                case '*': k = Token::Star; break;
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                default: throw ParseError(std::string("unexpected character '") + c + "'", start);
            }
            out.push_back({k, std::string(1, c), 0, start});
            ++i;
        }
    }
    out.push_back({Token::End, "", 0, s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    PBWElement run() {
        PBWElement r = parseSum();
        if (peek().kind != Token::End) throw ParseError("trailing input", peek().pos);
        return r;
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    Token next() { return toks_[idx_++]; }
    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        ++idx_;
    }

    long parseSignedInt() {
        bool neg = false;
        if (peek().kind == Token::Minus) { neg = true; ++idx_; }
        else if (peek().kind == Token::Plus) ++idx_;
        if (peek().kind != Token::Integer) throw ParseError("expected integer", peek().pos);
        long v = next().value;
        return neg ? -v : v;
    }

    std::vector<long> parseArgs(size_t count) {
        expect(Token::LParen, "'('");
        std::vector<long> args;
        for (size_t i = 0; i < count; ++i) {
            if (i > 0) expect(Token::Comma, "','");
            args.push_back(parseSignedInt());
        }
        expect(Token::RParen, "')'");
        return args;
    }

    PBWElement parseSum() {
        bool neg = false;
        if (peek().kind == Token::Minus) { neg = true; ++idx_; }
        else if (peek().kind == Token::Plus) ++idx_;
        PBWElement r = parseProduct();
        if (neg) r = -r;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = next().kind == Token::Minus;
            PBWElement t = parseProduct();
            if (minus) r -= t; else r += t;
        }
        return r;
    }

    bool startsAtom() const {
        auto k = peek().kind;
        return k == Token::Ident || k == Token::Integer || k == Token::LParen;
    }

    PBWElement parseProduct() {
        PBWElement r = parsePower();
        while (true) {
            if (peek().kind == Token::Star) {
                ++idx_;
                r = mul(r, parsePower());
            } else if (startsAtom()) {
                // juxtaposition reads as multiplication
                r = mul(r, parsePower());
            } else {
                break;
            }
        }
        return r;
    }

    PBWElement parsePower() {
        Token atomTok = peek();
        PBWElement base = parseAtom();
        if (peek().kind != Token::Caret) return base;
        ++idx_;
        long n = parseSignedInt();
        if (n >= 0) return pbwPow(base, n);
        // negative powers exist only for invertible torus monomials
        if (base.termCount() != 1)
            throw ParseError("negative power of a non-invertible element", atomTok.pos);
        auto& [m, c] = *base.coeffs().begin();
        if (m.f != 0 || m.e != 0 || c.isZero())
            throw ParseError("negative power of a non-invertible element", atomTok.pos);
        return PBWElement::monomial(0, m.k * n, 0, c.pow(n));
    }

    PBWElement parseAtom() {
        Token t = next();
        switch (t.kind) {
            case Token::Integer:
                return PBWElement(RatFunc(t.value));
            case Token::LParen: {
                PBWElement inner = parseSum();
                expect(Token::RParen, "')'");
                return inner;
            }
            case Token::Ident:
                return parseNamedAtom(t);
            default:
                throw ParseError("expected an atom", t.pos);
        }
    }

    PBWElement parseNamedAtom(const Token& t) {
        const std::string& name = t.text;
        auto needNonNeg = [&](long n, const char* what) {
            if (n < 0) throw std::domain_error(std::string(what) + " expects a nonnegative argument");
            return n;
        };
        if (name == "v") return PBWElement(RatFunc(LaurentInt::power(1)));
        if (name == "q") return PBWElement(RatFunc(LaurentInt::power(2)));
        if (name == "K") return PBWElement::genK(1);
        if (name == "e") return PBWElement::genE();
        if (name == "f") return RatFunc(brace(1)) * PBWElement::genF(1);
        if (name == "C") return casimir();
        if (name == "E") {
            if (peek().kind == Token::LParen) {
                long n = needNonNeg(parseArgs(1)[0], "E(n)");
                return RatFunc::inverseOf(braceFactorial(n)) * pbwPow(PBWElement::genE(), n);
            }
            return RatFunc::inverseOf(brace(1)) * PBWElement::genE();
        }
        if (name == "F") {
            if (peek().kind == Token::LParen) {
                long n = needNonNeg(parseArgs(1)[0], "F(n)");
                return PBWElement::genF(n);
            }
            return PBWElement::genF(1);
        }
        if (name == "sigma") return sigma(needNonNeg(parseArgs(1)[0], "sigma(n)"));
        if (name == "xi") return xiProduct(needNonNeg(parseArgs(1)[0], "xi(n)"), XiVariant::Plain);
        if (name == "xip") return xiProduct(needNonNeg(parseArgs(1)[0], "xip(n)"), XiVariant::Primed);
        if (name == "qb") {
            auto a = parseArgs(2);
            needNonNeg(a[1], "qb(m,n)");
            return PBWElement(qBinomialRat(a[0], a[1]));
        }
        if (name == "br") return PBWElement(RatFunc(brace(parseArgs(1)[0])));
        if (name == "brH") {
            auto a = parseArgs(2);
            needNonNeg(a[1], "brH(m,n)");
            return PBWElement::fromTorus(makeBraceH(a[0], a[1]));
        }
        if (name == "bbb")
            return PBWElement::fromTorus(makeBBB(needNonNeg(parseArgs(1)[0], "bbb(l)")));
        throw ParseError("unknown atom '" + name + "'", t.pos);
    }

    std::vector<Token> toks_;
    size_t idx_ = 0;
};

std::string scalarParen(const RatFunc& c) { return "(" + ratText(c) + ")"; }

// one printable term: explicit sign, body without sign
struct PrintTerm {
    bool negative = false;
    std::string body;
};

PrintTerm renderTerm(const RatFunc& c, const std::string& factors) {
    if (factors.empty()) {
        // pure scalar: single integral monomials carry their sign; anything
        // longer is parenthesized so sums re-parse unambiguously
        if (c.isIntegral() && c.num().isMonomial()) {
            auto& [e, k] = *c.num().coeffs().begin();
            LaurentInt mag = LaurentInt::monomial(k < 0 ? -k : k, e);
            return {k < 0, mag.str()};
        }
        return {false, scalarParen(c)};
    }
    if (c.isOne()) return {false, factors};
    if ((-c).isOne()) return {true, factors};
    return {false, scalarParen(c) + " " + factors};
}

std::string sumText(const std::vector<std::pair<RatFunc, std::string>>& terms) {
    if (terms.empty()) return "0";
    // a single scalar needs no disambiguating parentheses
    if (terms.size() == 1 && terms[0].second.empty()) return ratText(terms[0].first);
    std::ostringstream os;
    bool first = true;
    for (auto& [c, factors] : terms) {
        PrintTerm t = renderTerm(c, factors);
        if (first) {
            if (t.negative) os << "-";
        } else {
            os << (t.negative ? " - " : " + ");
        }
        os << t.body;
        first = false;
    }
    return os.str();
}

}  // namespace

PBWElement parseExpr(const std::string& input) { return Parser(input).run(); }

std::string laurentText(const LaurentInt& x) { return x.str(); }
std::string ratText(const RatFunc& x) { return x.str(); }

std::string torusText(const TorusElement& t) {
    if (t.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : t.coeffs()) {
        if (!first) os << " + ";
        first = false;
        os << scalarParen(c);
        if (p == 1) os << "K";
        else if (p != 0) os << "K^" << p;
    }
    return os.str();
}

namespace {

std::string monomialFactors(const PBWMonomial& m) {
    std::ostringstream os;
    bool any = false;
    auto sep = [&] { if (any) os << " "; any = true; };
    if (m.f > 0) { sep(); os << "F(" << m.f << ")"; }
    if (m.k != 0) {
        sep();
        os << "K";
        if (m.k != 1) os << "^" << m.k;
    }
    if (m.e > 0) {
        sep();
        os << "e";
        if (m.e != 1) os << "^" << m.e;
    }
    return os.str();
}

}  // namespace

std::string pbwText(const PBWElement& x) {
    std::vector<std::pair<RatFunc, std::string>> terms;
    for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it)
        terms.emplace_back(it->second, monomialFactors(it->first));
    return sumText(terms);
}

std::string tensorText(const TensorElement& t) {
    std::vector<std::pair<RatFunc, std::string>> terms;
    for (auto& [key, c] : t.coeffs()) {
        std::ostringstream os;
        for (size_t s = 0; s < key.size(); ++s) {
            if (s) os << " (x) ";
            std::string f = monomialFactors(key[s]);
            os << (f.empty() ? "1" : f);
        }
        terms.emplace_back(c, os.str());
    }
    return sumText(terms);
}

std::string centralPolyText(const CentralPoly& p) {
    std::vector<std::pair<RatFunc, std::string>> terms;
    for (auto& [n, ab] : p.coeffs()) {
        if (!ab.first.isZero())
            terms.emplace_back(ab.first, "sigma(" + std::to_string(n) + ")");
        if (!ab.second.isZero())
            terms.emplace_back(ab.second, "C sigma(" + std::to_string(n) + ")");
    }
    return sumText(terms);
}

std::string truncatedText(const TruncatedElement& t) {
    std::vector<std::pair<RatFunc, std::string>> terms;
    for (auto it = t.coeffs().rbegin(); it != t.coeffs().rend(); ++it) {
        const TruncKey& k = it->first;
        std::ostringstream os;
        bool any = false;
        auto sep = [&] { if (any) os << " "; any = true; };
        if (k.f > 0) { sep(); os << "F(" << k.f << ")"; }
        if (k.delta != 0) { sep(); os << "K"; }
        if (k.j > 0) {
            sep();
            if (t.filtration() == Filtration::Un) {
                os << "bbb(" << k.j << ")";
            } else {
                os << "brH(0,1)";
                if (k.j != 1) os << "^" << k.j;
            }
        }
        if (k.e > 0) {
            sep();
            os << "e";
            if (k.e != 1) os << "^" << k.e;
        }
        terms.emplace_back(RatFunc(it->second), os.str());
    }
    return sumText(terms);
}

std::string membershipText(Membership m) {
    switch (m) {
        case Membership::IN: return "IN";
        case Membership::OUT: return "OUT";
        case Membership::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

nlohmann::json laurentJson(const LaurentInt& x) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [e, c] : x.coeffs()) a.push_back({e, c.str()});
    return a;
}

nlohmann::json ratJson(const RatFunc& x) {
    return {{"num", laurentJson(x.num())}, {"den", laurentJson(x.den())}};
}

nlohmann::json torusJson(const TorusElement& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [p, c] : t.coeffs()) terms.push_back({{"k", p}, {"coeff", ratJson(c)}});
    return {{"terms", terms}};
}

namespace {
nlohmann::json monomialJson(const PBWMonomial& m) {
    return {{"f", m.f}, {"k", m.k}, {"e", m.e}};
}
PBWMonomial monomialFromJson(const nlohmann::json& j) {
    return PBWMonomial{j.at("f").get<long>(), j.at("k").get<long>(), j.at("e").get<long>()};
}
}  // namespace

nlohmann::json pbwJson(const PBWElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it) {
        nlohmann::json t = monomialJson(it->first);
        t["coeff"] = ratJson(it->second);
        terms.push_back(t);
    }
    return {{"terms", terms}};
}

nlohmann::json tensorJson(const TensorElement& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [key, c] : t.coeffs()) {
        nlohmann::json slots = nlohmann::json::array();
        for (auto& m : key) slots.push_back(monomialJson(m));
        terms.push_back({{"slots", slots}, {"coeff", ratJson(c)}});
    }
    return {{"slots", t.order()}, {"terms", terms}};
}

nlohmann::json centralPolyJson(const CentralPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [n, ab] : p.coeffs())
        a.push_back({{"n", n}, {"a", ratText(ab.first)}, {"b", ratText(ab.second)}});
    return a;
}

nlohmann::json truncatedJson(const TruncatedElement& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [k, c] : t.coeffs())
        terms.push_back({{"f", k.f},
                         {"kdelta", k.delta},
                         {t.filtration() == Filtration::Un ? "bbb" : "hpow", k.j},
                         {"e", k.e},
                         {"coeff", c.str()}});
    return {{"filtration", t.filtration() == Filtration::Un ? "Un" : "U1pow"},
            {"n", t.level()},
            {"terms", terms}};
}

LaurentInt laurentFromJson(const nlohmann::json& j) {
    LaurentInt r;
    for (auto& pair : j) {
        long e = pair.at(0).get<long>();
        Int c(pair.at(1).get<std::string>());
        r.add(e, c);
    }
    return r;
}

RatFunc ratFromJson(const nlohmann::json& j) {
    return RatFunc(laurentFromJson(j.at("num")), laurentFromJson(j.at("den")));
}

PBWElement pbwFromJson(const nlohmann::json& j) {
    PBWElement r;
    for (auto& t : j.at("terms")) r.add(monomialFromJson(t), ratFromJson(t.at("coeff")));
    return r;
}

TensorElement tensorFromJson(const nlohmann::json& j) {
    TensorElement r(j.at("slots").get<int>());
    for (auto& t : j.at("terms")) {
        TensorElement::Key key;
        for (auto& m : t.at("slots")) key.push_back(monomialFromJson(m));
        r.add(key, ratFromJson(t.at("coeff")));
    }
    return r;
}

}  // namespace qsl2
