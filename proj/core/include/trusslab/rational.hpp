#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "trusslab/outcome.hpp"

namespace trusslab {

/// Exact rational scalar for the linearized structures. Backed by
/// arbitrary-precision integers and kept normalized (gcd 1, positive
/// denominator); no floating point is used anywhere downstream of this type.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sign-safe construction; throws std::invalid_argument on zero denominator.
Rational make_rational(BigInt num, BigInt den);

/// "p/q" with q omitted when 1.
std::string rational_to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading '-').
Outcome<Rational> parse_rational(std::string_view s);

}  // namespace trusslab
