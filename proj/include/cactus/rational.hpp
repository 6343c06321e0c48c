#pragma once

#include <gmpxx.h>

#include <string>

namespace cactus {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q" or "-p/q". Throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace cactus
