#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surreal/ordinal.hpp"
#include "surreal/sign_word.hpp"

namespace surreal {

// The ring generated by the ordinals under the natural operations: finite
// sums of w^exponent * coefficient with integer coefficients, exponents
// strictly decreasing. Addition is coefficientwise, multiplication is the
// polynomial product with naturally-added exponents.
class Zon {
 public:
  struct Term {
    Ordinal exponent;
    Int coefficient;  // nonzero
    bool operator==(const Term& o) const {
      return exponent == o.exponent && coefficient == o.coefficient;
    }
  };

  Zon() = default;  // 0

  static Zon from_int(Int n);
  static Zon from_ordinal(const Ordinal& a);
  static Zon monomial(Ordinal exponent, Int coefficient);
  static Zon from_terms(std::vector<Term> terms);  // merges, drops zeros

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const Zon& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Term> terms_;
};

Zon zon_add(const Zon& a, const Zon& b);
Zon zon_neg(const Zon& a);
Zon zon_sub(const Zon& a, const Zon& b);
Zon zon_mul(const Zon& a, const Zon& b);

// order by leading terms (agrees with the sign-word order of zon_to_word)
int zon_cmp(const Zon& a, const Zon& b);

// juxtaposition of the monomial blocks w^exponent * coefficient
SignWord zon_to_word(const Zon& a);

std::string to_string(const Zon& a);

}  // namespace surreal
