// Exact integer and rational types shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symlev {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a documented precondition is violated.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration or work cap would be exceeded.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigInt ipow(const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); }

/// b^e in 64 bits; throws on overflow.
inline std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) throw precondition_error("64-bit power overflow");
    r *= b;
  }
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

/// Nearest integer, ties rounded away from zero.
inline BigInt nint(const Rational& x) {
  BigInt n = boost::multiprecision::numerator(x);
  BigInt d = boost::multiprecision::denominator(x);
  BigInt twice = 2 * n;
  BigInt r;
  if (n >= 0)
    r = (twice + d) / (2 * d);
  else
    r = -((-twice + d) / (2 * d));
  return r;
}

inline bool is_half_tie(const Rational& x) {
  return boost::multiprecision::denominator(x) == 2;
}

inline std::string to_string(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

}  // namespace symlev
