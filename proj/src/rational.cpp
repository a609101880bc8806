#include "jmap/rational.hpp"

#include <cctype>
#include <ostream>

namespace jmap {

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&]() -> parse_error { return parse_error("not a rational: '" + text + "'"); };
    std::size_t pos = 0, end = text.size();
    while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (pos == end) throw bad();
    std::string body = text.substr(pos, end - pos);

    auto parse_int = [&](const std::string& s) -> BigInt {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw bad();
        BigInt mag(s.substr(i));  // cpp_int rejects a leading '+'
        return s[0] == '-' ? -mag : mag;
    };

    auto slash = body.find('/');
    if (slash == std::string::npos) return Rational(parse_int(body));
    BigInt num = parse_int(body.substr(0, slash));
    BigInt den = parse_int(body.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace jmap
