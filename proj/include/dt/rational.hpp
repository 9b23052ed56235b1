#pragma once

// Exact arithmetic ground types. Everything downstream (polynomials, rational
// functions, q-series) is built over these; no floating point appears anywhere
// in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dt {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Library-wide error type. Thrown on contract violations (inexact division,
// truncation underflow, malformed input, singular systems).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw error("rat_pow: zero to negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Parses "a" or "a/b" with optional sign; used by the text readers.
inline Rational rat_parse(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw error("rat_parse: malformed rational '" + s + "'");
    }
}

inline std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace dt
