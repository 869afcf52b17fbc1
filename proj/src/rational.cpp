#include "freeprob/rational.hpp"

#include <cctype>

namespace freeprob {

std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

namespace {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw argument_error("empty integer in fraction");
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) throw argument_error("sign without digits in fraction");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw argument_error("invalid character in fraction: '" + std::string(text) + "'");
    }
    Integer magnitude{std::string(text.substr(i))};
    return text[0] == '-' ? Integer(-magnitude) : magnitude;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw argument_error("zero denominator in fraction: '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) throw argument_error("rational_pow requires exponent >= 0");
    Rational acc(1);
    Rational b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace freeprob
