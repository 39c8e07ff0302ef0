#ifndef QSL2_CHECKS_HPP
#define QSL2_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qsl2 {

struct CheckContext {
    long max = -1;       // range override; negative = per-check default
    uint64_t seed = 1;   // seed for randomized checks
};

struct CheckResult {
    bool pass = true;
    long cases = 0;
    std::string firstFailure;
};

struct Check {
    std::string suite;
    std::string id;
    std::string description;
    std::function<CheckResult(const CheckContext&)> fn;
};

const std::vector<Check>& allChecks();
std::vector<std::string> suiteNames();

// runs with exceptions converted into failures
CheckResult runCheck(const Check& c, const CheckContext& ctx);

}  // namespace qsl2

#endif
