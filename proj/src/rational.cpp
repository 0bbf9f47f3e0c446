#include "rectpack/rational.hpp"

#include "rectpack/errors.hpp"

#include <limits>

namespace rectpack {

namespace {

BigInt parse_int(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw InvalidArgument("malformed number '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw InvalidArgument("malformed number '" + s + "'");
  }
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

std::int64_t clamp_to_i64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo) return std::numeric_limits<std::int64_t>::min();
  if (v > hi) return std::numeric_limits<std::int64_t>::max();
  return v.convert_to<std::int64_t>();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text));
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.empty()) return Rational(parse_int(whole));
  bool neg = !whole.empty() && whole[0] == '-';
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt w = parse_int(whole);
  BigInt f = parse_int(frac);
  BigInt num = (neg ? -w : w) * scale + f;
  return neg ? Rational(-num, scale) : Rational(num, scale);
}

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

std::int64_t floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return clamp_to_i64(q);
}

std::int64_t ceil_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return clamp_to_i64(q);
}

std::int64_t floor_mul(const Rational& r, std::int64_t n) { return floor_of(r * n); }

std::int64_t ceil_mul(const Rational& r, std::int64_t n) { return ceil_of(r * n); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::int64_t ceil_inverse(const Rational& r) {
  if (r <= 0) throw InvalidArgument("ceil_inverse of non-positive value");
  return ceil_of(Rational(1) / r);
}

}  // namespace rectpack
