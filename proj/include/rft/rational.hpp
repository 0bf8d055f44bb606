// Exact rational scalars and the few numeric helpers the torsion
// formulas need (parsing, printing, exact square roots).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace rft {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse "p/q" or "p" (arbitrary precision, exact). Throws ParseError.
Rational parse_rational(const std::string& text);

/// Serialize as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational abs(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

/// Exact n-th power with integer exponent (possibly negative; base must
/// be nonzero for negative exponents).
Rational pow_int(const Rational& base, long exponent);

/// Positive exact square root, if the value is the square of a rational.
std::optional<Rational> sqrt_exact(const Rational& value);

}  // namespace rft
