#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rectpack {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", an integer, or a finite decimal such as "0.125".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// floor(r * n) and ceil(r * n), exact.
std::int64_t floor_mul(const Rational& r, std::int64_t n);
std::int64_t ceil_mul(const Rational& r, std::int64_t n);

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

double to_double(const Rational& r);

// Smallest integer m with m >= 1/r.
std::int64_t ceil_inverse(const Rational& r);

}  // namespace rectpack
