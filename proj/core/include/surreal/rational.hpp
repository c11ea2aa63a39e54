#pragma once

#include <string>
#include <string_view>

#include "surreal/bigmath.hpp"

namespace surreal {

// numerator / 2^exponent with the numerator odd or zero (exponent 0 then)
struct Dyadic {
  Int num;
  unsigned exp = 0;

  Dyadic() : num(0) {}
  Dyadic(Int numerator, unsigned exponent);  // normalizes
  static Dyadic from_int(Int n) { return Dyadic(std::move(n), 0); }

  bool operator==(const Dyadic&) const = default;
};

Dyadic operator+(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a);
Dyadic operator-(const Dyadic& a, const Dyadic& b);
Dyadic operator*(const Dyadic& a, const Dyadic& b);
int dyadic_cmp(const Dyadic& a, const Dyadic& b);
inline bool operator<(const Dyadic& a, const Dyadic& b) { return dyadic_cmp(a, b) < 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return dyadic_cmp(a, b) > 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return dyadic_cmp(a, b) <= 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return dyadic_cmp(a, b) >= 0; }
Int dyadic_floor(const Dyadic& a);
Int dyadic_ceil(const Dyadic& a);

// num / den in lowest terms, den >= 1
struct Rational {
  Int num;
  Int den;

  Rational() : num(0), den(1) {}
  Rational(Int numerator, Int denominator);  // normalizes, denominator != 0
  static Rational from_int(Int n) { return Rational(std::move(n), 1); }
  static Rational from_dyadic(const Dyadic& d);

  bool is_dyadic() const;       // denominator a power of two
  Dyadic to_dyadic() const;     // requires is_dyadic()

  bool operator==(const Rational&) const = default;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational rational_inverse(const Rational& a);  // DivisionByZero on 0
int rational_cmp(const Rational& a, const Rational& b);
inline bool operator<(const Rational& a, const Rational& b) { return rational_cmp(a, b) < 0; }
inline bool operator>(const Rational& a, const Rational& b) { return rational_cmp(a, b) > 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return rational_cmp(a, b) <= 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return rational_cmp(a, b) >= 0; }

// `-43/32`, `7`, `1/5`; output is `num/den` or a bare integer.
std::string to_string(const Rational& r);
std::string to_string(const Dyadic& d);
Rational parse_rational(std::string_view text);

}  // namespace surreal
