#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lierealise {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (integers of any size). Throws Error(parse_error).
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" for integers.
std::string to_string(const Rational &q);

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

Rational factorial(unsigned k);

// (sum of parts)! / prod(parts!)
Integer multinomial(const std::vector<unsigned> &parts);

} // namespace lierealise
