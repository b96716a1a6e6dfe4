#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rht {

/// Exact rational scalar. Every computation in the library is carried out
/// over these; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& x);

}  // namespace rht
