#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgsb {

/// Exact scalar type. Every coefficient in the engine is a canonical rational
/// with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", "-p/q" or an integer. Throws ParseError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "3/2", "-4", "0".
std::string to_string(const Rational& q);

/// n choose k for small nonnegative arguments, as an exact rational.
Rational binomial(long n, long k);

/// 1/k! as an exact rational.
Rational inverse_factorial(long k);

}  // namespace cgsb
