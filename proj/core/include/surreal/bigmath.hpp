#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "surreal/errors.hpp"

namespace surreal {

// Exact, arbitrary-precision integers throughout; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;  // kept non-negative by construction

inline Nat nat_pow(const Nat& base, const Nat& exp, unsigned max_bits = 1u << 22) {
  if (exp < 0) raise(errc::undefined, "negative exponent");
  if (!exp.is_zero() && base > 1) {
    Nat bits = exp * Nat(boost::multiprecision::msb(base) + 1);
    if (bits > max_bits) raise(errc::resource_limit, "natural power too large");
  }
  Nat r = 1, b = base, e = exp;
  while (!e.is_zero()) {
    if (boost::multiprecision::bit_test(e, 0)) r *= b;
    e >>= 1;
    if (!e.is_zero()) b *= b;
  }
  return r;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace surreal
