#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wlift {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& q);

std::string to_string(const RatVec& v);

/// Fractional part in [0,1).
Rational frac(const Rational& q);

Integer floor(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);

/// Least common multiple of the denominators (1 for an integral vector).
Integer denominator_lcm(const RatVec& v);

bool is_integral(const RatVec& v);

bool is_zero(const RatVec& v);

RatVec to_rational(const IntVec& v);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& v);

}  // namespace wlift
