#pragma once

#include <gmpxx.h>

#include <string>

#include "linemat/errors.hpp"

namespace linemat::linalg {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the representation the wire format
// "p" / "p/q" expects.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p" or "p/q" in base 10.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw UsageError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw UsageError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace linemat::linalg
