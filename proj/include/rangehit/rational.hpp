// Exact rational arithmetic used for all coordinates and LP entries.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rangehit {

using BigInt = boost::multiprecision::cpp_int;

// Always in lowest terms with a positive denominator (canonical form is
// maintained by the backend). Arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline int sign(const Rational& r) { return r.sign(); }

inline BigInt rational_num(const Rational& r) { return numerator(r); }
inline BigInt rational_den(const Rational& r) { return denominator(r); }

// "num/den", or a bare integer when den == 1. The wire format for all files.
std::string to_string(const Rational& r);

// Accepts "123", "-4/6" (normalized on input), with optional surrounding
// whitespace. Rejects everything else, including "1/0".
Rational parse_rational(std::string_view text);

}  // namespace rangehit
