#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace robinson {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational & q);

/// Accepts "p", "p/q" and finite decimals such as "-6.75". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

} // namespace robinson
