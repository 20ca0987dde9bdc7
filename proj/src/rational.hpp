#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace definetti {

/// Exact rational scalar used by every combinatorial and algebraic routine.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace definetti
