#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ciq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a", "-a" or "a/b" (b != 0).
Rational parse_rational(const std::string& s);

// "num/den" when den != 1, plain "num" otherwise.
std::string rational_str(const Rational& q);

}  // namespace ciq
