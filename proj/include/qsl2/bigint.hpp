#ifndef QSL2_BIGINT_HPP
#define QSL2_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace qsl2 {

using Int = boost::multiprecision::cpp_int;

inline Int intGcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

}  // namespace qsl2

#endif
