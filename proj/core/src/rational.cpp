#include "affweyl/rational.hpp"

#include "affweyl/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace affweyl {

std::string to_string(const Rational& q) {
    std::string s = std::to_string(q.numerator());
    if (q.denominator() != 1) {
        s += '/';
        s += std::to_string(q.denominator());
    }
    return s;
}

namespace {

long long parse_integer(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected integer", start);
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
    }
    return negative ? -value : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    long long num = parse_integer(text, pos);
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_integer(text, pos);
        if (den == 0) throw ParseError("zero denominator", pos);
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("trailing characters after rational", pos);
    return Rational(num, den);
}

} // namespace affweyl
