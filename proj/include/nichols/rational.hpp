#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace nichols {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : AlgebraError {
    DivisionByZero() : AlgebraError("division by zero") {}
};

/// Renders a rational as "p" or "p/q".
inline std::string to_string(const Rational& r)
{
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << '/' << denominator(r);
    return os.str();
}

} // namespace nichols
