#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpqlab {

// Exact arithmetic used throughout the analytical side. mpq_class keeps values
// in lowest terms with a positive denominator after every operation, which is
// exactly the invariant the oracles rely on.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p/q" or plain "p".
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("parse_rational: bad fraction '" + text + "'");
    }
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    r.canonicalize();
    return r;
}

// Canonical fraction string: "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) {
    return r.get_d();
}

}  // namespace dpqlab
