#include "ciq/rational.hpp"

#include "ciq/errors.hpp"

namespace ciq {

Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    }
    catch (const std::runtime_error&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

std::string rational_str(const Rational& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

}  // namespace ciq
