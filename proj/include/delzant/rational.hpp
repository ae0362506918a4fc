#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace delzant {

using Integer = boost::multiprecision::cpp_int;

// Always in lowest terms with a positive denominator; arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input violates a mathematical precondition (non-convex
/// polygon, non-Delzant corner, parameter outside its domain, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed text input (bad rational literal, unknown generator).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "n" or "p/q" (q > 0, optional leading sign on p). Whitespace is not
/// accepted inside the literal.
Rational parse_rational(std::string_view text);

/// Exact rendering: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Best rational approximation of `x` with denominator at most
/// `max_denominator`, from the continued-fraction convergents and
/// semiconvergents. Throws DomainError for non-finite input.
Rational approximate(double x, const Integer& max_denominator = Integer(1000000));

/// Exact value of a finite double (every binary64 is a dyadic rational).
Rational exact_from_double(double x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace delzant
