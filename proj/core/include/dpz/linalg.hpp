#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dpz {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

RationalMatrix to_rational(const IntegerMatrix& m);

// Exact Gaussian elimination. Returns the unique solution of a x = b, or
// nullopt when a is singular or the system is inconsistent. a must be square.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b);

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);

// x - floor(x), always in [0, 1).
Rational fractional_part(const Rational& x);
bool is_integer(const Rational& x);

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& x);

}  // namespace dpz
