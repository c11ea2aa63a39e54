#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surreal/ordinal.hpp"

namespace surreal {

enum class Sign : unsigned char { minus, plus };
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// A maximal block of equal signs; length may be transfinite.
struct Run {
  Sign sign;
  Ordinal length;  // >= 1
  bool operator==(const Run&) const = default;
};

// A finite sign pattern repeated omega times (total ordinal length w).
// Canonical: primitive, contains both signs, maximally left-absorbed.
struct Rep {
  std::vector<Sign> body;
  bool operator==(const Rep&) const = default;
};

using Segment = std::variant<Run, Rep>;

// A surreal number as its transfinite sign expansion, stored as a canonical
// finite segment list. The birthday is the total ordinal length; the empty
// word is 0. Canonicalization makes structural equality number equality.
class SignWord {
 public:
  SignWord() = default;

  static SignWord from_segments(std::vector<Segment> segments);
  static SignWord run(Sign sign, Ordinal length);  // zero length gives 0
  static SignWord from_signs(std::span<const Sign> signs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool is_zero() const { return segs_.empty(); }
  Ordinal birthday() const;
  bool runs_only() const;  // no Rep segment
  bool is_short() const;   // finite birthday (every run finite, no Rep)

  bool operator==(const SignWord&) const = default;

 private:
  std::vector<Segment> segs_;
};

// Total order: lexicographic on sign expansions with minus < absent < plus.
std::strong_ordering compare(const SignWord& x, const SignWord& y);
inline bool operator<(const SignWord& a, const SignWord& b) { return compare(a, b) < 0; }
inline bool operator>(const SignWord& a, const SignWord& b) { return compare(a, b) > 0; }
inline bool operator<=(const SignWord& a, const SignWord& b) { return compare(a, b) <= 0; }
inline bool operator>=(const SignWord& a, const SignWord& b) { return compare(a, b) >= 0; }

// First position where the padded sign sequences differ; EqualInputs if x == y.
Ordinal discriminant(const SignWord& x, const SignWord& y);

// Sign at an ordinal position; nullopt for positions at or beyond the birthday.
std::optional<Sign> sign_at(const SignWord& w, const Ordinal& pos);

// The number determined by a finite nonempty set of ordinals: the maximum is
// the birthday, membership below it gives the plus positions.
SignWord from_ordinal_set(std::span<const Ordinal> elements);
// Inverse view, defined for short run-only words; includes the birthday.
std::vector<Ordinal> to_ordinal_set(const SignWord& w);

enum class InfiniteClass { pos_infinite, neg_infinite, infinitesimal, finite };

struct Quanta {
  Ordinal birthday;
  Ordinal tip;            // first sign-change position; birthday if none
  SignWord integer_part;  // truncation at the tip
  int sign;               // +1, -1, or 0 for the empty word
  Ordinal width;          // ordinal count of plus positions
  InfiniteClass infinite_class;
};
Quanta quanta(const SignWord& x);

struct TreeRelation {
  bool descends;  // x is an ancestor of y (initial segment below its birthday)
  bool initial;   // additionally the birthday position of x carries + in y
};
TreeRelation tree_relate(const SignWord& x, const SignWord& y);

// Youngest common ancestor; EqualInputs if x == y.
SignWord yca(const SignWord& x, const SignWord& y);

// [x]_a: x itself if its birthday is <= a, else the prefix below a closed at a.
SignWord truncate(const SignWord& x, const Ordinal& a);

// The tail of x from position a on (requires a <= birthday).
SignWord suffix_from(const SignWord& x, const Ordinal& a);

SignWord sharp(const SignWord& x);  // flip every sign (the opposite)
SignWord star(const SignWord& x);   // fix position 0, flip the interior

SignWord child(const SignWord& x, Sign direction);  // append one sign

// Ordinal-style arithmetic on words: concatenation, sign-directed repetition,
// and iterated multiplication. The birthday map is a morphism for all three.
enum class WordOp { concat, mul, pow };
SignWord concat_word(const SignWord& x, const SignWord& y);
SignWord mul_word(const SignWord& x, const SignWord& y);
SignWord pow_word(const SignWord& x, const SignWord& y);
SignWord cantor_word(WordOp op, const SignWord& x, const SignWord& y);

// x repeated length times (the homogeneous case of mul_word).
SignWord repeat_word(const SignWord& x, const Ordinal& length);

// The monomial map: w^0 = 1, each + appends w^(width+1) plusses, each -
// appends w^(width+1) minuses. Run-only inputs.
SignWord omega_map(const SignWord& x);

// Limit of a finite descendance chain (the last element once verified).
SignWord limit_of_chain(std::span<const SignWord> chain);

struct CanonicalCut {
  std::vector<SignWord> left;   // truncations at plus positions, ascending
  std::vector<SignWord> right;  // truncations at minus positions, ascending
};
CanonicalCut canonical_cut(const SignWord& x);  // finite birthday only

struct Decomposition {
  // purely infinite part and integer tail; present only for omnific words
  std::optional<std::pair<SignWord, SignWord>> omnific;
  // x = integer (+) fraction with 0 <= fraction < 1
  std::pair<SignWord, SignWord> int_frac;
};
Decomposition decompose(const SignWord& x);

// Named small words.
SignWord word_zero();
SignWord word_one();
SignWord word_minus_one();
SignWord word_half();
SignWord word_omega();
SignWord word_epsilon();
SignWord word_from_int(long long n);

// Grammar: `0` or a sequence of `+`/`-` atoms with optional `^<ordinal>`
// lengths and `(<finite word>)^w` blocks, e.g. `+^w`, `+-^w`, `(+-)^w`.
std::string to_string(const SignWord& w);
SignWord parse_sign_word(std::string_view text);

std::size_t hash_value(const SignWord& w);

}  // namespace surreal
