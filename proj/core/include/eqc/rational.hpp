#pragma once

#include <gmpxx.h>

#include <string>

#include "eqc/error.hpp"

namespace eqc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Formats q as "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws InvalidInput.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("bad rational literal: " + text);
    }
}

/// Canonical fraction num/den. mpq_class's own two-argument constructor does
/// not reduce, and GMP arithmetic requires canonical operands, so every
/// fraction built from parts must pass through here. Throws InvalidInput on
/// a zero denominator.
inline Rational frac(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// True when q has denominator 1.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact conversion to Integer. Throws InvalidInput when q is not integral.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw InvalidInput("expected integer, got " + to_string(q));
    return q.get_num();
}

}  // namespace eqc
