#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qsl2/checks.hpp"
#include "qsl2/textio.hpp"

using namespace qsl2;

namespace {

struct GlobalOpts {
    std::string format = "text";
    long max = -1;
    uint64_t seed = 1;
    std::string configPath;
};

void applyConfigFile(GlobalOpts& g) {
    if (g.configPath.empty()) return;
    std::ifstream in(g.configPath);
    if (!in) throw std::domain_error("cannot open config file: " + g.configPath);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "format") g.format = value;
        else if (key == "max") g.max = std::stol(value);
        else if (key == "seed") g.seed = std::stoull(value);
        else if (!key.empty()) throw std::domain_error("unknown config key: " + key);
    }
}

void checkFormat(const GlobalOpts& g) {
    if (g.format != "text" && g.format != "json")
        throw std::domain_error("unknown format: " + g.format);
}

void emit(const GlobalOpts& g, const std::string& text, const nlohmann::json& j) {
    if (g.format == "json") std::cout << j.dump() << "\n";
    else std::cout << text << "\n";
}

int runVerify(const GlobalOpts& g, const std::string& suite) {
    bool known = suite == "all" || suite == "failprobe";
    for (auto& s : suiteNames()) known = known || s == suite;
    if (!known) throw std::domain_error("unknown suite: " + suite);
    CheckContext ctx{g.max, g.seed};
    bool allPass = true;
    long total = 0;
    std::cout << "suite=" << suite << " max=" << (g.max < 0 ? std::string("default") : std::to_string(g.max))
              << " seed=" << g.seed << "\n";
    for (auto& c : allChecks()) {
        if (suite != "all" && c.suite != suite) continue;
        if (suite == "all" && c.suite == "failprobe") continue;
        CheckResult r = runCheck(c, ctx);
        total += r.cases;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << c.id << " (" << r.cases << " cases)";
        if (!r.pass) std::cout << " first counterexample: " << r.firstFailure;
        std::cout << "\n";
        allPass = allPass && r.pass;
    }
    std::cout << (allPass ? "OK" : "FAILED") << " (" << total << " cases)" << "\n";
    return allPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for the integral quantized enveloping algebra of sl2"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text|json");
    app.add_option("--max", g.max, "range bound for verification suites");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--config", g.configPath, "key=value config file mirroring the flags");

    std::string expr, exprY, ideal = "U1pow", filtration = "Un", suite = "all", grading = "Z";
    long level = 1, terms = 5;

    auto* cNormalize = app.add_subcommand("normalize", "parse and print in PBW normal form");
    cNormalize->add_option("expr", expr)->required();
    auto* cDelta = app.add_subcommand("delta", "coproduct");
    cDelta->add_option("expr", expr)->required();
    auto* cCounit = app.add_subcommand("counit", "counit");
    cCounit->add_option("expr", expr)->required();
    auto* cAntipode = app.add_subcommand("antipode", "antipode");
    cAntipode->add_option("expr", expr)->required();
    auto* cHc = app.add_subcommand("hc", "Harish-Chandra projection onto the torus");
    cHc->add_option("expr", expr)->required();
    auto* cAd = app.add_subcommand("ad", "adjoint action of the first argument on the second");
    cAd->add_option("actor", expr)->required();
    cAd->add_option("target", exprY)->required();
    auto* cCentral = app.add_subcommand("central-expand", "expand a central element over the sigma basis");
    cCentral->add_option("expr", expr)->required();
    auto* cMember = app.add_subcommand("member", "ideal membership test");
    cMember->add_option("expr", expr)->required();
    cMember->add_option("--ideal", ideal, "U1pow|U0kl|Un|UPrime|UenCentral");
    cMember->add_option("--n", level, "filtration level (or k,l for U0kl via --n and --l)");
    long u0l = -1;
    cMember->add_option("--l", u0l, "second window parameter for U0kl");
    auto* cTruncate = app.add_subcommand("truncate", "canonical truncation");
    cTruncate->add_option("expr", expr)->required();
    cTruncate->add_option("--filtration", filtration, "Un|U1pow");
    cTruncate->add_option("--n", level, "precision");
    auto* cTheta = app.add_subcommand("theta", "partial sum of the quasi-R-matrix");
    cTheta->add_option("--terms", terms, "number of terms");
    auto* cGrade = app.add_subcommand("grade", "homogeneous decomposition");
    cGrade->add_option("expr", expr)->required();
    cGrade->add_option("--grading", grading, "Z|K2|V2");
    auto* cVerify = app.add_subcommand("verify", "run a verification suite");
    cVerify->add_option("--suite", suite, "qcomb|torus|pbw|hopf|center|completion|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        applyConfigFile(g);
        checkFormat(g);
        auto flagNonIntegral = [](const PBWElement& x) {
            if (!x.isIntegral())
                std::cerr << "note: coefficients leave the integral form\n";
        };
        if (cNormalize->parsed()) {
            PBWElement x = parseExpr(expr);
            flagNonIntegral(x);
            emit(g, pbwText(x), pbwJson(x));
        } else if (cDelta->parsed()) {
            TensorElement t = coproduct(parseExpr(expr));
            if (!t.isIntegral())
                std::cerr << "note: coefficients leave the integral form\n";
            emit(g, tensorText(t), tensorJson(t));
        } else if (cCounit->parsed()) {
            RatFunc c = counit(parseExpr(expr));
            emit(g, ratText(c), ratJson(c));
        } else if (cAntipode->parsed()) {
            PBWElement x = antipode(parseExpr(expr));
            flagNonIntegral(x);
            emit(g, pbwText(x), pbwJson(x));
        } else if (cHc->parsed()) {
            TorusElement t = harishChandra(parseExpr(expr));
            emit(g, torusText(t), torusJson(t));
        } else if (cAd->parsed()) {
            PBWElement x = adjoint(parseExpr(expr), parseExpr(exprY));
            flagNonIntegral(x);
            emit(g, pbwText(x), pbwJson(x));
        } else if (cCentral->parsed()) {
            CentralPoly p = sigmaExpand(parseExpr(expr));
            emit(g, centralPolyText(p), centralPolyJson(p));
        } else if (cMember->parsed()) {
            IdealSpec spec = IdealSpec::u1pow(level);
            if (ideal == "U1pow") spec = IdealSpec::u1pow(level);
            else if (ideal == "U0kl") spec = IdealSpec::u0kl(level, u0l < 0 ? level : u0l);
            else if (ideal == "Un") spec = IdealSpec::un(level);
            else if (ideal == "UPrime") spec = IdealSpec::uPrime(level);
            else if (ideal == "UenCentral") spec = IdealSpec::uenCentral(level);
            else throw std::domain_error("unknown ideal: " + ideal);
            Membership m = idealMember(parseExpr(expr), spec);
            emit(g, membershipText(m), nlohmann::json{{"membership", membershipText(m)}});
        } else if (cTruncate->parsed()) {
            Filtration f;
            if (filtration == "Un") f = Filtration::Un;
            else if (filtration == "U1pow") f = Filtration::U1pow;
            else throw std::domain_error("unknown filtration: " + filtration);
            TruncatedElement t = uTruncate(parseExpr(expr), f, level);
            emit(g, truncatedText(t), truncatedJson(t));
        } else if (cTheta->parsed()) {
            TensorElement t = thetaTrunc(terms);
            emit(g, tensorText(t), tensorJson(t));
        } else if (cGrade->parsed()) {
            Grading gr;
            if (grading == "Z") gr = Grading::Z;
            else if (grading == "K2") gr = Grading::K2;
            else if (grading == "V2") gr = Grading::V2;
            else throw std::domain_error("unknown grading: " + grading);
            auto parts = gradeDecompose(parseExpr(expr), gr);
            nlohmann::json ja = nlohmann::json::array();
            std::string text;
            for (auto& [d, part] : parts) {
                if (!text.empty()) text += "\n";
                text += "deg " + std::to_string(d) + ": " + pbwText(part);
                ja.push_back({{"degree", d}, {"value", pbwJson(part)}});
            }
            if (parts.empty()) text = "0";
            emit(g, text, nlohmann::json{{"grading", grading}, {"parts", ja}});
        } else if (cVerify->parsed()) {
            return runVerify(g, suite);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
