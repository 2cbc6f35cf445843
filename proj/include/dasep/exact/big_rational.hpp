#pragma once

// Arbitrary-precision integers and rationals, backed by GMP through
// Boost.Multiprecision. Expression templates are disabled so the types
// behave as plain values inside Eigen containers.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace dasep {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

inline bool is_zero(const BigRational& x) { return x.is_zero(); }

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or a
/// zero denominator.
BigRational parse_rational(std::string_view text);

/// "p/q" with q omitted when it is 1.
std::string to_string(const BigRational& x);

/// x^k for any integer k (x must be nonzero when k < 0).
BigRational pow(const BigRational& x, int k);

}  // namespace dasep
