#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fq/errors.hpp"

namespace fq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

double to_double(const Rational& q);

// Parses "3", "-7/2" or a plain decimal like "1.25" into an exact rational.
Rational parse_rational(const std::string& text);

// Compact form: "3", "-7/2".
std::string rational_to_string(const Rational& q);

// True when q is the square of a rational; the root is written to *root.
bool exact_sqrt(const Rational& q, Rational* root);

// Largest n >= 0 with n*n <= v.
BigInt isqrt_floor(const BigInt& v);

// A rational r with r <= sqrt(q) and sqrt(q) - r < 1/denom. q >= 0.
Rational sqrt_lower_bound(const Rational& q, std::int64_t denom = 1'000'000);

// Smallest integer n >= 0 with n*n >= q. q >= 0.
std::int64_t ceil_sqrt(const Rational& q);

} // namespace fq
