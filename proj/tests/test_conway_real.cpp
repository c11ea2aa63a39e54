#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "surreal/conway_real.hpp"

using namespace surreal;

namespace {

SignWord W(const char* text) { return parse_sign_word(text); }
Rational Q(const char* text) { return parse_rational(text); }

SignWord from_set(std::initializer_list<unsigned long long> elems) {
  std::vector<Ordinal> v;
  for (auto e : elems) v.push_back(Ordinal::from_nat(Nat(e)));
  return from_ordinal_set(v);
}

// set = head ∪ { start + k*step + o : k >= 0, o in offsets } ∪ {w},
// with every head element below start and every offset below step
SignWord periodic_set(std::vector<unsigned long long> head,
                      unsigned long long start,
                      std::vector<unsigned long long> offsets,
                      unsigned long long step) {
  std::vector<Segment> segs;
  std::vector<bool> plus_head(start, false);
  for (auto e : head) plus_head[e] = true;
  for (unsigned long long i = 0; i < start; ++i) {
    segs.push_back(Run{plus_head[i] ? Sign::plus : Sign::minus, Ordinal::from_nat(1)});
  }
  std::vector<bool> plus_body(step, false);
  for (auto o : offsets) plus_body[o] = true;
  std::vector<Sign> body;
  for (unsigned long long i = 0; i < step; ++i) {
    body.push_back(plus_body[i] ? Sign::plus : Sign::minus);
  }
  segs.push_back(Rep{body});
  return SignWord::from_segments(std::move(segs));
}

}  // namespace

TEST_CASE("dyadic and rational plumbing") {
  CHECK(Dyadic(Int(4), 2) == Dyadic(Int(1), 0));
  CHECK(Dyadic(Int(6), 3) == Dyadic(Int(3), 2));
  CHECK(Rational(Int(4), Int(-6)) == Rational(Int(-2), Int(3)));
  CHECK(to_string(Q("-43/32")) == "-43/32");
  CHECK(to_string(Q("7")) == "7");
  CHECK(Q("1/5") + Q("4/5") == Q("1"));
  CHECK(Q("1/3") * Q("3/4") == Q("1/4"));
  CHECK(rational_inverse(Q("-2/3")) == Q("-3/2"));
  CHECK_THROWS_AS(rational_inverse(Q("0")), domain_error);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK(dyadic_floor(Dyadic(Int(-1), 2)) == -1);
  CHECK(dyadic_floor(Dyadic(Int(5), 1)) == 2);
  CHECK(dyadic_ceil(Dyadic(Int(5), 1)) == 3);
  CHECK(Q("3/4").is_dyadic());
  CHECK_FALSE(Q("2/3").is_dyadic());
  CHECK(Q("3/4").to_dyadic() == Dyadic(Int(3), 2));
}

TEST_CASE("values of short words") {
  CHECK(to_rational(from_set({1, 2})) == Q("-1/2"));
  CHECK(to_rational(from_set({0, 2})) == Q("1/2"));
  for (unsigned n = 1; n <= 8; ++n) {
    // {1,...,n} and its mirror {0,n}
    std::vector<Ordinal> run;
    for (unsigned i = 1; i <= n; ++i) run.push_back(Ordinal::from_nat(i));
    Rational expected(Int(-1), Int(1) << (n - 1));
    CHECK(to_rational(from_ordinal_set(run)) == expected);
    std::vector<Ordinal> two = {Ordinal(), Ordinal::from_nat(n)};
    CHECK(to_rational(from_ordinal_set(two)) == -expected);
  }
  // the displayed sum -2 + 2^-1 + 2^-3 + 2^-5 + 2^-9 for {2,3,5,7,11}
  Rational series = Q("-2") + Q("1/2") + Q("1/8") + Q("1/32") + Q("1/512");
  CHECK(series == Q("-687/512"));
  CHECK(to_rational(from_set({2, 3, 5, 7, 11})) == series);
  // dropping the 11 gives the -1.34375 of the decimal rendering
  CHECK(to_rational(from_set({2, 3, 5, 7})) == Q("-43/32"));
  CHECK(to_rational(word_zero()) == Q("0"));
  CHECK(to_rational(word_from_int(-3)) == Q("-3"));
  CHECK(to_rational(word_from_int(7)) == Q("7"));
}

TEST_CASE("values of eventually periodic words") {
  CHECK(to_rational(periodic_set({}, 1, {0}, 2)) == Q("-2/3"));   // {1,3,5,...}
  CHECK(to_rational(periodic_set({}, 0, {0}, 2)) == Q("2/3"));    // {0,2,4,...}
  CHECK(to_rational(periodic_set({0}, 2, {0}, 4)) == Q("8/15"));  // {0,2,6,10,...}
  CHECK(to_rational(periodic_set({0}, 3, {0}, 4)) == Q("4/15"));
  CHECK(to_rational(periodic_set({0}, 4, {0}, 4)) == Q("2/15"));
  CHECK(to_rational(periodic_set({0}, 5, {0}, 4)) == Q("1/15"));
  CHECK(to_rational(periodic_set({0}, 4, {0, 1}, 4)) == Q("1/5"));     // {0,4,5,8,9,...}
  CHECK(to_rational(periodic_set({0, 3}, 6, {0, 1}, 4)) == Q("3/10"));  // {0,3,6,7,...}
  CHECK_THROWS_AS(to_rational(word_omega()), domain_error);
  CHECK_THROWS_AS(to_rational(concat_word(W("(+-)^w"), W("+"))), domain_error);
}

TEST_CASE("words from rationals") {
  CHECK(from_rational(Q("-3")) == from_set({3}));
  CHECK(from_rational(Q("-1/2")) == from_set({1, 2}));
  CHECK(from_rational(Q("1/2")) == word_half());
  CHECK(from_rational(Q("0")) == word_zero());
  CHECK(from_rational(Q("1/5")) == periodic_set({0}, 4, {0, 1}, 4));
  CHECK(from_rational(Q("3/10")) == periodic_set({0, 3}, 6, {0, 1}, 4));
  CHECK(from_rational(Q("2/3")) == W("(+-)^w"));
  CHECK(from_rational(Q("-2/3")) == W("(-+)^w"));
}

TEST_CASE("round trips between words and rationals") {
  // rational -> word -> rational across denominators with 2-part and odd part
  for (long long num = -512; num <= 512; ++num) {
    for (long long den : {1, 2, 3, 6, 12, 63, 64, 4032}) {
      Rational r{Int(num), Int(den)};
      CHECK(to_rational(from_rational(r)) == r);
    }
  }
  // word -> rational -> word on canonical repetition-terminated words
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> plen(0, 8);
  std::uniform_int_distribution<int> blen(1, 6);
  int tried = 0;
  while (tried < 2000) {
    std::vector<Segment> segs;
    int np = plen(rng);
    for (int i = 0; i < np; ++i) {
      segs.push_back(Run{bit(rng) ? Sign::plus : Sign::minus, Ordinal::from_nat(1)});
    }
    std::vector<Sign> body;
    int nb = blen(rng);
    for (int i = 0; i < nb; ++i) body.push_back(bit(rng) ? Sign::plus : Sign::minus);
    bool mixed = false;
    for (Sign s : body) mixed = mixed || s != body[0];
    if (!mixed) continue;  // a one-signed body is not a repetition
    segs.push_back(Rep{body});
    SignWord x = SignWord::from_segments(std::move(segs));
    CHECK(from_rational(to_rational(x)) == x);
    ++tried;
  }
  // short round trip
  for (unsigned long long mask = 0; mask < 512; ++mask) {
    std::vector<Sign> signs;
    for (unsigned i = 0; i < 9 && (mask >> i) != 0; ++i) {
      signs.push_back((mask >> i) & 1 ? Sign::plus : Sign::minus);
    }
    SignWord x = SignWord::from_signs(signs);
    CHECK(from_rational(to_rational(x)) == x);
  }
}

TEST_CASE("the value map is an order isomorphism") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long long> num(-200, 200);
  std::uniform_int_distribution<long long> den(1, 120);
  for (int i = 0; i < 1000; ++i) {
    Rational a{Int(num(rng)), Int(den(rng))};
    Rational b{Int(num(rng)), Int(den(rng))};
    SignWord wa = from_rational(a), wb = from_rational(b);
    CHECK((rational_cmp(a, b) < 0) == (compare(wa, wb) < 0));
    CHECK((a == b) == (wa == wb));
  }
}

TEST_CASE("sharp corresponds to negation") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> num(-300, 300);
  std::uniform_int_distribution<long long> den(1, 90);
  for (int i = 0; i < 500; ++i) {
    Rational r{Int(num(rng)), Int(den(rng))};
    CHECK(to_rational(sharp(from_rational(r))) == -r);
  }
}

TEST_CASE("carry rule: averaging x with its right child lands on x+-") {
  auto all_short = [](unsigned maxb) {
    std::vector<SignWord> out;
    for (unsigned b = 0; b <= maxb; ++b) {
      for (unsigned long long mask = 0; mask < (1ull << b); ++mask) {
        std::vector<Sign> signs;
        for (unsigned i = 0; i < b; ++i) {
          signs.push_back((mask >> i) & 1 ? Sign::plus : Sign::minus);
        }
        out.push_back(SignWord::from_signs(signs));
      }
    }
    return out;
  };
  Rational half(Int(1), Int(2));
  for (const SignWord& x : all_short(6)) {
    SignWord up = child(x, Sign::plus);
    Rational mid = (to_rational(x) + to_rational(up)) * half;
    CHECK(from_rational(mid) == child(up, Sign::minus));
  }
}

TEST_CASE("prefix and repetitor") {
  {
    PrefixRepetitor pr = prefix_repetitor(from_set({1, 2}));
    CHECK(pr.prefix == from_set({1, 2}));
    CHECK_FALSE(pr.repetitor.has_value());
  }
  {
    // 2/3 = (+-)^w: empty prefix, repetitor 1/2 of length 2
    PrefixRepetitor pr = prefix_repetitor(from_rational(Q("2/3")));
    CHECK(pr.prefix == word_zero());
    REQUIRE(pr.repetitor.has_value());
    CHECK(*pr.repetitor == word_half());
    CHECK(pr.repetitor->birthday() == Ordinal::from_nat(2));
  }
  {
    PrefixRepetitor pr = prefix_repetitor(from_rational(Q("8/15")));
    REQUIRE(pr.repetitor.has_value());
    CHECK(pr.repetitor->birthday() == Ordinal::from_nat(4));
  }
  CHECK_THROWS_AS(prefix_repetitor(word_omega()), domain_error);
  // reconstruction: prefix (+) repetitor (*) w
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> num(-100, 100);
  std::uniform_int_distribution<long long> den(1, 80);
  for (int i = 0; i < 500; ++i) {
    Rational r{Int(num(rng)), Int(den(rng))};
    SignWord x = from_rational(r);
    PrefixRepetitor pr = prefix_repetitor(x);
    SignWord back = pr.repetitor
                        ? concat_word(pr.prefix, mul_word(*pr.repetitor, word_omega()))
                        : pr.prefix;
    CHECK(back == x);
    // minimality: no shorter repetitor reproduces the word
    if (pr.repetitor) {
      unsigned long long plen =
          pr.repetitor->birthday().finite_value().convert_to<unsigned long long>();
      for (unsigned long long shorter = 1; shorter < plen; ++shorter) {
        SignWord cand = truncate(*pr.repetitor, Ordinal::from_nat(Nat(shorter)));
        SignWord rebuilt = concat_word(pr.prefix, mul_word(cand, word_omega()));
        CHECK_FALSE(rebuilt == x);
      }
    }
  }
}
