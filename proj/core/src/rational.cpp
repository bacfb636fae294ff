#include "stairbound/rational.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace stairbound {

const Rational kEulerLow{BigInt(2718281828LL), BigInt(1000000000LL)};
const Rational kEulerHigh{BigInt(2718281829LL), BigInt(1000000000LL)};

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt result{1};
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of negative value");
  if (x == 0) return 0;
  BigInt r = x;
  BigInt next = (r + x / r) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  BigInt r = isqrt(x);
  return r * r == x;
}

Rational sqrt_approx(const Rational& x) {
  // sqrt(p/q) = isqrt(p*q*10^60) / (q*10^30)
  static const BigInt scale = ipow(10, 30);
  BigInt p = boost::multiprecision::numerator(x);
  BigInt q = boost::multiprecision::denominator(x);
  BigInt root = isqrt(p * q * scale * scale);
  return Rational(root, q * scale);
}

Rational n_pow_three_halves(long n) {
  BigInt nn{n};
  if (is_perfect_square(nn)) {
    return Rational(nn * isqrt(nn));
  }
  return Rational(nn) * sqrt_approx(Rational(nn));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string decimal_string(const Rational& r, int significant_digits) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, to_double(r));
  out << buf;
  return out.str();
}

std::string exact_string(const Rational& r) {
  BigInt p = boost::multiprecision::numerator(r);
  BigInt q = boost::multiprecision::denominator(r);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

}  // namespace stairbound
