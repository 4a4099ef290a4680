#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bschur {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a mathematical postcondition fails (a claimed identity does
// not hold, a structure that must be unique is not, ...).  Distinct from
// std::invalid_argument, which signals a rejected input.
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

inline void math_check(bool ok, const std::string& what) {
    if (!ok) throw math_error(what);
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(Int base, int exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace bschur
