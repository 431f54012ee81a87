#include "rangehit/rational.hpp"

#include <cctype>

namespace rangehit {

std::string to_string(const Rational& r) {
    std::string s = rational_num(r).str();
    if (rational_den(r) != 1) {
        s += '/';
        s += rational_den(r).str();
    }
    return s;
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
    out = BigInt(std::string(text[0] == '+' ? text.substr(1) : text));  // cpp_int rejects '+'
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    } else {
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den))
            throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
        if (den == 0) throw std::invalid_argument("bad rational: zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

}  // namespace rangehit
