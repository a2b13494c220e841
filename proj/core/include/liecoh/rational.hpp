#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liecoh {

// GMP keeps mpq_class canonical (positive denominator, reduced) after every
// arithmetic operation; values built from strings are canonicalized on parse.
// The two-argument constructor does not canonicalize, so comparisons on such
// values are only meaningful after canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Reduced "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace liecoh
