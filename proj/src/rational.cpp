#include "liftvf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace liftvf {

namespace {

Int parse_integer(const std::string& s, const std::string& whole) {
    if (s.empty())
        throw std::invalid_argument("malformed rational '" + whole + "'");
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') pos = 1;
    if (pos == s.size())
        throw std::invalid_argument("malformed rational '" + whole + "'");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("malformed rational '" + whole + "'");
    return Int(s);
}

}  // namespace

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s, s));
    const Int num = parse_integer(s.substr(0, slash), s);
    const Int den = parse_integer(s.substr(slash + 1), s);
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational '" + s + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    return r.str();
}

}  // namespace liftvf
