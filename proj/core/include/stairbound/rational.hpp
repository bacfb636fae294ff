#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stairbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exp as an exact integer, exp >= 0.
BigInt ipow(const BigInt& base, unsigned exp);

/// floor(sqrt(x)) for x >= 0.
BigInt isqrt(const BigInt& x);

bool is_perfect_square(const BigInt& x);

/// n^{3/2}. Exact when n is a perfect square; otherwise a rational
/// approximation accurate to ~1e-30 relative (callers flag such results
/// as inexact).
Rational n_pow_three_halves(long n);

/// Rational approximation of sqrt(x) with ~1e-30 relative accuracy.
Rational sqrt_approx(const Rational& x);

/// Enclosure of Euler's number: kEulerLow <= e <= kEulerHigh.
/// Verification against thresholds of the form c/e picks the enclosure side
/// that makes the check conservative.
extern const Rational kEulerLow;
extern const Rational kEulerHigh;

double to_double(const Rational& r);

/// Decimal rendering with the given number of significant digits.
std::string decimal_string(const Rational& r, int significant_digits = 12);

/// "num/den" in lowest terms (or just "num" when the denominator is 1).
std::string exact_string(const Rational& r);

}  // namespace stairbound
