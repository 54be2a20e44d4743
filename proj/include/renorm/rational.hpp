#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace renorm {

using Rational = mpq_class;

inline Rational makeRational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string toString(const Rational &q) { return q.get_str(); }

/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parseRational(std::string_view text);

} // namespace renorm
