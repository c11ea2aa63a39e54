#pragma once

#include <optional>

#include "surreal/rational.hpp"
#include "surreal/sign_word.hpp"

namespace surreal {

// Exact value of a short or eventually periodic word (birthday <= w).
// NotRepresentable for anything transfinite beyond one trailing repetition.
Rational to_rational(const SignWord& x);

// Inverse: dyadic inputs give short words, other rationals end in a
// repetition block at birthday w.
SignWord from_rational(const Rational& r);

struct PrefixRepetitor {
  SignWord prefix;
  std::optional<SignWord> repetitor;  // absent iff the input is short
};

// Minimal split x = prefix (+) repetitor (*) w, repetitor birthday minimized
// first, then the prefix birthday.
PrefixRepetitor prefix_repetitor(const SignWord& x);

}  // namespace surreal
