#include "surreal/rational.hpp"

#include <cctype>

namespace surreal {

using boost::multiprecision::gcd;

Dyadic::Dyadic(Int numerator, unsigned exponent) : num(std::move(numerator)), exp(exponent) {
  if (num.is_zero()) {
    exp = 0;
    return;
  }
  while (exp > 0 && Int(num % 2).is_zero()) {
    num /= 2;
    --exp;
  }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp, b.exp);
  Int n = a.num * (Int(1) << (e - a.exp)) + b.num * (Int(1) << (e - b.exp));
  return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num, a.exp); }

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num * b.num, a.exp + b.exp);
}

int dyadic_cmp(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.exp, b.exp);
  Int l = a.num * (Int(1) << (e - a.exp));
  Int r = b.num * (Int(1) << (e - b.exp));
  return l < r ? -1 : (l == r ? 0 : 1);
}

Int dyadic_floor(const Dyadic& a) {
  Int p = Int(1) << a.exp;
  Int q = a.num / p;  // truncates toward zero
  if (a.num < 0 && !Int(a.num % p).is_zero()) q -= 1;
  return q;
}

Int dyadic_ceil(const Dyadic& a) { return -dyadic_floor(-a); }

Rational::Rational(Int numerator, Int denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den.is_zero()) raise(errc::division_by_zero, "rational with denominator 0");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num < 0 ? Int(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num.is_zero()) den = 1;
}

Rational Rational::from_dyadic(const Dyadic& d) {
  return Rational(d.num, Int(1) << d.exp);
}

bool Rational::is_dyadic() const {
  Int d = den;
  while (!boost::multiprecision::bit_test(d, 0)) d >>= 1;
  return d == 1;
}

Dyadic Rational::to_dyadic() const {
  if (!is_dyadic()) raise(errc::not_representable, "rational is not dyadic");
  unsigned e = den == 1 ? 0 : boost::multiprecision::lsb(den);
  if ((Int(1) << e) != den) raise(errc::not_representable, "rational is not dyadic");
  return Dyadic(num, e);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

Rational rational_inverse(const Rational& a) {
  if (a.num.is_zero()) raise(errc::division_by_zero, "inverse of zero");
  return Rational(a.den, a.num);
}

int rational_cmp(const Rational& a, const Rational& b) {
  Int l = a.num * b.den;
  Int r = b.num * a.den;
  return l < r ? -1 : (l == r ? 0 : 1);
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return r.num.str();
  return r.num.str() + "/" + r.den.str();
}

std::string to_string(const Dyadic& d) { return to_string(Rational::from_dyadic(d)); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw parse_error(pos, msg); };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) fail("expected digits");
  Int num(std::string(text.substr(start, pos - start)));
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart) fail("expected a denominator");
    den = Int(std::string(text.substr(dstart, pos - dstart)));
    if (den.is_zero()) fail("denominator must be nonzero");
  }
  if (pos != text.size()) fail("trailing characters in rational literal");
  return Rational(negative ? Int(-num) : num, den);
}

}  // namespace surreal
