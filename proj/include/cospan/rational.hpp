#ifndef COSPAN_RATIONAL_HPP
#define COSPAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace cospan {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator), which the rest of the project relies on for decidable
// equality of matrices, generators and subspaces.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
// Throws ParseError on anything else (including q = 0).
Rational rational_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace cospan

#endif
