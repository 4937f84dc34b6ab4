#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace minksum {

/// Exact arbitrary-precision fraction. GMP keeps it in reduced form with a
/// positive denominator, which is exactly the invariant the geometry needs.
/// No floating point appears anywhere in core paths.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace minksum
