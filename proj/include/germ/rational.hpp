#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace germ {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number: arbitrary-precision, always in lowest terms with
/// positive denominator (both guaranteed by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

inline Integer rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "a", "-a" or "a/b" with integer a, b and b > 0 after normalization.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> std::runtime_error {
        return std::runtime_error("invalid rational literal: '" + text + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
        Integer d(den);
        if (d == 0) throw bad();
        return Rational(Integer(num), d);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

inline Rational rational_pow(const Rational& q, int e) {
    if (e < 0) throw std::invalid_argument("rational_pow: negative exponent");
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace germ
