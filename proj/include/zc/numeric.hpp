#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "zc/errors.hpp"

namespace zc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw integrality_violation("expected integer, got " + r.str());
    return numerator(r);
}

// "p/q" with the "/q" omitted for integers; exact, never floating point.
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw error("zero denominator in rational literal: " + s);
    return Rat(num, den);
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace zc
