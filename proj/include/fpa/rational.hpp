#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fpa {

/// Exact rational coefficients. Every computation in the library is over Q.
using Rational = mpq_class;

/// "p/q" or "p" (denominator 1), always in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q" with an optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace fpa
