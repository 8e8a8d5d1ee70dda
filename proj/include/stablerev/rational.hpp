#ifndef STABLEREV_RATIONAL_HPP
#define STABLEREV_RATIONAL_HPP

#include <string>
#include <boost/multiprecision/cpp_int.hpp>

#include "stablerev/errors.hpp"

namespace stablerev {

// Exact arithmetic only. Every quantity in this library is a Rational;
// floating point never enters any computation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders in lowest terms as "p/q", or "p" when q == 1.
inline std::string format_rational(const Rational& r) {
    if (den(r) == 1)
        return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

namespace detail {

inline bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace detail

/// Parses "p", "p/q" or a finite decimal such as "0.4" (converted exactly).
/// Grammar: -?[0-9]+(/[1-9][0-9]*)? | -?[0-9]+\.[0-9]+
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash);
        std::string q = s.substr(slash + 1);
        if (!detail::all_digits(p) || !detail::all_digits(q))
            throw SchemaError("bad rational \"" + text + "\"");
        Int denom(q);
        if (denom == 0)
            throw SchemaError("bad rational \"" + text + "\": zero denominator");
        value = Rational(Int(p), denom);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (!detail::all_digits(whole) || !detail::all_digits(frac))
            throw SchemaError("bad rational \"" + text + "\"");
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        value = Rational(Int(whole) * scale + Int(frac), scale);
    } else {
        if (!detail::all_digits(s))
            throw SchemaError("bad rational \"" + text + "\"");
        value = Rational(Int(s));
    }
    return negative ? Rational(-value) : value;
}

} // namespace stablerev

#endif
