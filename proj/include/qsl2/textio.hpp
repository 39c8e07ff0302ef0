#ifndef QSL2_TEXTIO_HPP
#define QSL2_TEXTIO_HPP

#include <string>

#include <json.hpp>

#include "qsl2/completion.hpp"

namespace qsl2 {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// Grammar: sum := product (('+'|'-') product)*; product := power (('*')? power)*;
// power := atom ('^' signed-int)?; atom := v | q | integer | K | E | F | e | f
//   | C | F(n) | E(n) | sigma(n) | xi(n) | xip(n) | qb(m,n) | br(a) | brH(m,n)
//   | bbb(l) | '(' sum ')'.
// Everything evaluates into PBW normal form; scalars embed as K^0 terms.
PBWElement parseExpr(const std::string& input);

std::string laurentText(const LaurentInt& x);
std::string ratText(const RatFunc& x);
std::string torusText(const TorusElement& t);
std::string pbwText(const PBWElement& x);
std::string tensorText(const TensorElement& t);
std::string centralPolyText(const CentralPoly& p);
std::string truncatedText(const TruncatedElement& t);
std::string membershipText(Membership m);

nlohmann::json laurentJson(const LaurentInt& x);
nlohmann::json ratJson(const RatFunc& x);
nlohmann::json torusJson(const TorusElement& t);
nlohmann::json pbwJson(const PBWElement& x);
nlohmann::json tensorJson(const TensorElement& t);
nlohmann::json centralPolyJson(const CentralPoly& p);
nlohmann::json truncatedJson(const TruncatedElement& t);

LaurentInt laurentFromJson(const nlohmann::json& j);
RatFunc ratFromJson(const nlohmann::json& j);
PBWElement pbwFromJson(const nlohmann::json& j);
TensorElement tensorFromJson(const nlohmann::json& j);

}  // namespace qsl2

#endif
