#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surreal/bigmath.hpp"

namespace surreal {

// Ordinals below epsilon_0 in Cantor normal form: a finite sum of terms
// w^exponent * coefficient with strictly decreasing exponents and
// coefficients >= 1. The empty sum is 0. Values are immutable and the
// representation is canonical, so structural equality is ordinal equality.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // 0

  static Ordinal from_nat(Nat n);
  static Ordinal omega();
  // w^exponent * coefficient (coefficient >= 1)
  static Ordinal omega_pow(Ordinal exponent, Nat coefficient = 1);
  static Ordinal from_terms(std::vector<Term> terms);  // validates CNF shape

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const;
  bool is_finite() const;
  bool is_successor() const;  // has an immediate predecessor
  bool is_limit() const { return !is_successor(); }  // 0 counts as a limit
  Nat finite_value() const;   // requires is_finite()
  Nat finite_part() const;    // trailing w^0 coefficient (0 if none)
  Ordinal limit_part() const; // terms with exponent > 0

  Ordinal successor() const;
  Ordinal predecessor() const;  // requires is_successor()

  int nesting_depth() const { return depth_; }

  bool operator==(const Ordinal& o) const;

 private:
  std::vector<Term> terms_;
  int depth_ = 0;  // 0 for 0; otherwise 1 + max exponent depth
  void finish();   // computes depth, enforces the nesting bound
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coefficient;  // >= 1
  bool operator==(const Term& o) const {
    return exponent == o.exponent && coefficient == o.coefficient;
  }
};

inline bool Ordinal::is_zero() const { return terms_.empty(); }

inline bool Ordinal::operator==(const Ordinal& o) const {
  return terms_ == o.terms_;
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);
inline bool operator<(const Ordinal& a, const Ordinal& b) { return cmp(a, b) < 0; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) >= 0; }

// Cantor (ordinal) arithmetic: associative, left distributive, non-commutative.
Ordinal cantor_add(const Ordinal& a, const Ordinal& b);
Ordinal cantor_mul(const Ordinal& a, const Ordinal& b);
Ordinal cantor_pow(const Ordinal& a, const Ordinal& b);

// The unique g with a (+) g = b; requires a <= b.
Ordinal left_sub(const Ordinal& a, const Ordinal& b);

// a = b (*) quotient (+) remainder with remainder < b; requires b != 0.
struct DivRem {
  Ordinal quotient;
  Ordinal remainder;
};
DivRem div_rem_left(const Ordinal& a, const Ordinal& b);

// Hessenberg (natural) operations: commutative, associative, distributive.
Ordinal hessenberg_add(const Ordinal& a, const Ordinal& b);
Ordinal hessenberg_mul(const Ordinal& a, const Ordinal& b);

// Least ordinal not in the (finite) set.
Ordinal mex(std::span<const Ordinal> values);

// Maximum CNF nesting depth (process-wide); keeps the representable class
// below epsilon_0. Default 64.
int ordinal_depth_bound();
void set_ordinal_depth_bound(int bound);

// Text grammar: `0`, decimal naturals, `w`, `w^<ordinal>`, `w^<ordinal>*<nat>`,
// terms joined by `+` in strictly decreasing exponent order, e.g. `w^2*3+w+4`.
std::string to_string(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);

std::size_t hash_value(const Ordinal& a);

}  // namespace surreal
