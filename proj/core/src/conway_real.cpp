#include "surreal/conway_real.hpp"

namespace surreal {

namespace {

constexpr std::size_t kMaxBits = 1u << 16;

struct Flattened {
  std::vector<Sign> prefix;
  std::vector<Sign> period;  // empty for short words
};

Flattened flatten(const SignWord& x) {
  Flattened f;
  const auto& segs = x.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (const Run* r = std::get_if<Run>(&segs[i])) {
      if (!r->length.is_finite()) {
        raise(errc::not_representable, "transfinite run outside a repetition");
      }
      unsigned long long len = r->length.finite_value().convert_to<unsigned long long>();
      if (f.prefix.size() + len > kMaxBits) {
        raise(errc::resource_limit, "word too long to evaluate");
      }
      f.prefix.insert(f.prefix.end(), len, r->sign);
      continue;
    }
    if (i + 1 != segs.size()) {
      raise(errc::not_representable, "birthday beyond w is not a real value");
    }
    f.period = std::get<Rep>(segs[i]).body;
  }
  return f;
}

Sign bit_at(const Flattened& f, std::size_t m) {
  if (m < f.prefix.size()) return f.prefix[m];
  return f.period[(m - f.prefix.size()) % f.period.size()];
}

// multiplicative order of 2 modulo odd b > 1
unsigned long long order_of_two(const Int& b) {
  Int v = 2 % b;
  unsigned long long d = 1;
  while (v != 1) {
    v = (v * 2) % b;
    ++d;
    if (d > kMaxBits) raise(errc::resource_limit, "period too long");
  }
  return d;
}

}  // namespace

Rational to_rational(const SignWord& x) {
  if (x.is_zero()) return Rational();
  if (sign_at(x, Ordinal()) == Sign::plus) {
    return -to_rational(sharp(x));
  }
  Flattened f = flatten(x);
  // first plus position
  std::size_t total = f.prefix.size() + f.period.size();
  std::size_t M = 0;
  while (M < total && bit_at(f, M) == Sign::minus) ++M;
  if (M == total && f.period.empty()) {
    // pure minus word: the set {n}, value -n
    return Rational(-Int(f.prefix.size()), 1);
  }
  Rational r(-Int(M), 1);
  if (f.period.empty()) {
    // finite bits from M+1 through the birthday position
    Int num = 0;
    std::size_t last = f.prefix.size();  // the birthday carries a plus
    for (std::size_t m = M + 1; m <= last; ++m) {
      num *= 2;
      if (m == last || bit_at(f, m) == Sign::plus) num += 1;
    }
    r = r + Rational(num, Int(1) << (last - M));
    return r;
  }
  // align the periodic tail at a phase-0 boundary past M
  std::size_t p = f.period.size();
  std::size_t b0 = f.prefix.size();
  while (b0 < M + 1) b0 += p;
  Int num = 0;
  for (std::size_t m = M + 1; m < b0; ++m) {
    num *= 2;
    if (bit_at(f, m) == Sign::plus) num += 1;
  }
  if (b0 > M + 1) r = r + Rational(num, Int(1) << (b0 - 1 - M));
  Int q = 0;
  for (std::size_t j = 0; j < p; ++j) {
    if (f.period[j] == Sign::plus) q += Int(1) << (p - j);
  }
  Int den = ((Int(1) << p) - 1) * (Int(1) << (b0 - M));
  return r + Rational(q, den);
}

SignWord from_rational(const Rational& r) {
  if (r.num.is_zero()) return word_zero();
  if (r.num > 0) return sharp(from_rational(-r));
  // r = -r0 + f with r0 >= 1, 0 <= f < 1
  Int r0 = -r.num / r.den;
  if (!Int(r.num % r.den).is_zero()) r0 += 1;
  Rational f = r + Rational(r0, 1);
  unsigned long long head = r0.convert_to<unsigned long long>();
  if (head > kMaxBits) raise(errc::resource_limit, "integer part too large");
  std::vector<Sign> symbols(head, Sign::minus);
  if (f.num.is_zero()) {
    // the integer part is the whole story: x = {r0}
    return SignWord::from_signs(symbols);
  }
  symbols.push_back(Sign::plus);  // position r0
  // binary digits of f = u/d: preperiod for the 2-part of d, then the cycle
  Int u = f.num, d = f.den;
  unsigned k = 0;
  Int odd = d;
  while (Int(odd % 2).is_zero()) {
    odd /= 2;
    ++k;
  }
  auto next_bit = [&]() {
    u *= 2;
    if (u >= d) {
      u -= d;
      return Sign::plus;
    }
    return Sign::minus;
  };
  for (unsigned i = 0; i < k; ++i) symbols.push_back(next_bit());
  if (odd == 1) {
    // dyadic: the final 1 bit became the birthday position; digits end here
    // (u/d reduced means the last of the k bits was a 1, now the maximum)
    symbols.pop_back();
    return SignWord::from_signs(symbols);
  }
  unsigned long long ell = order_of_two(odd);
  std::vector<Sign> body;
  for (unsigned long long i = 0; i < ell; ++i) body.push_back(next_bit());
  std::vector<Segment> segs;
  for (Sign s : symbols) segs.push_back(Run{s, Ordinal::from_nat(1)});
  segs.push_back(Rep{std::move(body)});
  return SignWord::from_segments(std::move(segs));
}

PrefixRepetitor prefix_repetitor(const SignWord& x) {
  if (x.is_short()) return PrefixRepetitor{x, std::nullopt};
  const auto& segs = x.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    bool last = i + 1 == segs.size();
    if (std::holds_alternative<Rep>(segs[i])) {
      if (!last) raise(errc::not_representable, "birthday beyond w");
    } else if (!std::get<Run>(segs[i]).length.is_finite()) {
      raise(errc::not_representable, "transfinite run outside a repetition");
    }
  }
  const Rep& rep = std::get<Rep>(segs.back());
  PrefixRepetitor out;
  out.prefix = SignWord::from_segments({segs.begin(), segs.end() - 1});
  out.repetitor = SignWord::from_signs(rep.body);
  return out;
}

}  // namespace surreal
