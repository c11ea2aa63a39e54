#include "surreal/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace surreal {

namespace {

std::atomic<int> g_depth_bound{64};
constexpr std::size_t kMaxTerms = 1u << 16;

}  // namespace

int ordinal_depth_bound() { return g_depth_bound.load(); }
void set_ordinal_depth_bound(int bound) { g_depth_bound.store(bound); }

void Ordinal::finish() {
  depth_ = 0;
  for (const Term& t : terms_) {
    depth_ = std::max(depth_, t.exponent.depth_ + 1);
  }
  if (depth_ > ordinal_depth_bound()) {
    raise(errc::depth_exceeded, "CNF nesting depth " + std::to_string(depth_) +
                                    " exceeds bound " +
                                    std::to_string(ordinal_depth_bound()));
  }
  if (terms_.size() > kMaxTerms) {
    raise(errc::resource_limit, "too many CNF terms");
  }
}

Ordinal Ordinal::from_nat(Nat n) {
  if (n < 0) raise(errc::undefined, "negative natural");
  Ordinal r;
  if (!n.is_zero()) {
    r.terms_.push_back(Term{Ordinal(), std::move(n)});
  }
  r.finish();
  return r;
}

Ordinal Ordinal::omega() { return omega_pow(from_nat(1), 1); }

Ordinal Ordinal::omega_pow(Ordinal exponent, Nat coefficient) {
  if (coefficient <= 0) raise(errc::undefined, "coefficient must be >= 1");
  Ordinal r;
  r.terms_.push_back(Term{std::move(exponent), std::move(coefficient)});
  r.finish();
  return r;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient <= 0) raise(errc::undefined, "coefficient must be >= 1");
    if (i > 0 && cmp(terms[i - 1].exponent, terms[i].exponent) <= 0) {
      raise(errc::undefined, "CNF exponents must strictly decrease");
    }
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  r.finish();
  return r;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

Nat Ordinal::finite_value() const {
  if (!is_finite()) raise(errc::undefined, "ordinal is not finite");
  return terms_.empty() ? Nat(0) : terms_[0].coefficient;
}

Nat Ordinal::finite_part() const {
  if (is_successor()) return terms_.back().coefficient;
  return Nat(0);
}

Ordinal Ordinal::limit_part() const {
  Ordinal r;
  for (const Term& t : terms_) {
    if (!t.exponent.is_zero()) r.terms_.push_back(t);
  }
  r.finish();
  return r;
}

Ordinal Ordinal::successor() const { return cantor_add(*this, from_nat(1)); }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) raise(errc::undefined, "limit ordinal has no predecessor");
  Ordinal r = *this;
  if (r.terms_.back().coefficient == 1) {
    r.terms_.pop_back();
  } else {
    r.terms_.back().coefficient -= 1;
  }
  r.finish();
  return r;
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    auto e = cmp(ta[i].exponent, tb[i].exponent);
    if (e != 0) return e;
    if (ta[i].coefficient != tb[i].coefficient) {
      return ta[i].coefficient < tb[i].coefficient ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
  }
  if (ta.size() != tb.size()) {
    return ta.size() < tb.size() ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Ordinal cantor_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms()[0].exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (cmp(t.exponent, lead) > 0) out.push_back(t);
  }
  // merge a's term at the leading exponent of b, if present
  Nat coeff = b.terms()[0].coefficient;
  for (const auto& t : a.terms()) {
    if (cmp(t.exponent, lead) == 0) coeff += t.coefficient;
  }
  out.push_back(Ordinal::Term{lead, coeff});
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal cantor_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal result;
  const Ordinal& ea = a.terms()[0].exponent;
  for (const auto& t : b.terms()) {
    if (!t.exponent.is_zero()) {
      result = cantor_add(result,
                          Ordinal::omega_pow(cantor_add(ea, t.exponent), t.coefficient));
    } else {
      // a * n for finite n >= 1: scale the leading coefficient, keep the tail
      std::vector<Ordinal::Term> scaled = a.terms();
      scaled[0].coefficient *= t.coefficient;
      result = cantor_add(result, Ordinal::from_terms(std::move(scaled)));
    }
  }
  return result;
}

namespace {

// For a limit ordinal l (all exponents >= 1), the unique q with w (*) q = l.
Ordinal omega_left_quotient(const Ordinal& l) {
  std::vector<Ordinal::Term> out;
  for (const auto& t : l.terms()) {
    out.push_back(Ordinal::Term{left_sub(Ordinal::from_nat(1), t.exponent),
                                t.coefficient});
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal pow_by_finite(const Ordinal& a, const Nat& m) {
  // binary powering over cantor_mul; CNF growth is caught by the term budget
  Ordinal result = Ordinal::from_nat(1);
  Ordinal base = a;
  Nat e = m;
  while (!e.is_zero()) {
    if (boost::multiprecision::bit_test(e, 0)) result = cantor_mul(result, base);
    e >>= 1;
    if (!e.is_zero()) base = cantor_mul(base, base);
  }
  return result;
}

}  // namespace

Ordinal cantor_pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal::from_nat(1);
  if (a.is_zero()) return Ordinal();
  if (a == Ordinal::from_nat(1)) return a;
  if (a.is_finite()) {
    const Nat base = a.finite_value();
    if (b.is_finite()) return Ordinal::from_nat(nat_pow(base, b.finite_value()));
    // n^(l (+) m) = w^(l / w) (*) n^m for finite n >= 2, limit l
    Ordinal lim = b.limit_part();
    Ordinal head = Ordinal::omega_pow(omega_left_quotient(lim), 1);
    Nat m = b.finite_part();
    if (m.is_zero()) return head;
    return cantor_mul(head, Ordinal::from_nat(nat_pow(base, m)));
  }
  const Ordinal& ea = a.terms()[0].exponent;
  if (b.is_finite()) return pow_by_finite(a, b.finite_value());
  // a^(l (+) m) = w^(ea (*) l) (*) a^m for infinite a, limit l
  Ordinal lim = b.limit_part();
  Ordinal head = Ordinal::omega_pow(cantor_mul(ea, lim), 1);
  Nat m = b.finite_part();
  if (m.is_zero()) return head;
  return cantor_mul(head, pow_by_finite(a, m));
}

Ordinal left_sub(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0;
  while (i < ta.size() && i < tb.size() && ta[i] == tb[i]) ++i;
  if (i == ta.size()) {
    return Ordinal::from_terms({tb.begin() + i, tb.end()});
  }
  if (i == tb.size()) raise(errc::undefined, "left_sub requires a <= b");
  auto e = cmp(ta[i].exponent, tb[i].exponent);
  if (e > 0) raise(errc::undefined, "left_sub requires a <= b");
  if (e < 0) {
    return Ordinal::from_terms({tb.begin() + i, tb.end()});
  }
  if (ta[i].coefficient > tb[i].coefficient) {
    raise(errc::undefined, "left_sub requires a <= b");
  }
  if (ta[i].coefficient == tb[i].coefficient) {
    // same term but the tails differ; a's tail must be below b's tail head,
    // which is impossible in CNF unless a's tail is a strict prefix -- that
    // case was consumed above, so here a > b.
    raise(errc::undefined, "left_sub requires a <= b");
  }
  std::vector<Ordinal::Term> out;
  out.push_back(Ordinal::Term{tb[i].exponent, tb[i].coefficient - ta[i].coefficient});
  out.insert(out.end(), tb.begin() + i + 1, tb.end());
  return Ordinal::from_terms(std::move(out));
}

DivRem div_rem_left(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) raise(errc::division_by_zero, "left division by zero");
  if (b.is_finite()) {
    const Nat n = b.finite_value();
    Ordinal lim = a.limit_part();
    Nat m = a.finite_part();
    Nat q = m / n, r = m % n;
    Ordinal quotient = cantor_add(lim, Ordinal::from_nat(q));
    return DivRem{quotient, Ordinal::from_nat(r)};
  }
  Ordinal q;
  Ordinal r = a;
  const Ordinal& eb = b.terms()[0].exponent;
  const Nat& cb = b.terms()[0].coefficient;
  while (cmp(r, b) >= 0) {
    const Ordinal& er = r.terms()[0].exponent;
    const Nat& cr = r.terms()[0].coefficient;
    if (cmp(er, eb) > 0) {
      Ordinal f = left_sub(eb, er);
      q = cantor_add(q, Ordinal::omega_pow(f, cr));
      r = Ordinal::from_terms({r.terms().begin() + 1, r.terms().end()});
    } else {
      Nat n = cr / cb;
      while (n >= 1 && cmp(cantor_mul(b, Ordinal::from_nat(n)), r) > 0) --n;
      if (n < 1) break;  // r < b after all (leading terms equal, tail smaller)
      q = cantor_add(q, Ordinal::from_nat(n));
      r = left_sub(cantor_mul(b, Ordinal::from_nat(n)), r);
      break;  // remainder now has leading exponent < eb
    }
  }
  return DivRem{q, r};
}

Ordinal hessenberg_add(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> out;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (i == ta.size()) {
      out.push_back(tb[j++]);
    } else if (j == tb.size()) {
      out.push_back(ta[i++]);
    } else {
      auto e = cmp(ta[i].exponent, tb[j].exponent);
      if (e > 0) {
        out.push_back(ta[i++]);
      } else if (e < 0) {
        out.push_back(tb[j++]);
      } else {
        out.push_back(Ordinal::Term{ta[i].exponent,
                                    ta[i].coefficient + tb[j].coefficient});
        ++i;
        ++j;
      }
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal hessenberg_mul(const Ordinal& a, const Ordinal& b) {
  Ordinal result;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Ordinal e = hessenberg_add(s.exponent, t.exponent);
      result = hessenberg_add(result,
                              Ordinal::omega_pow(std::move(e),
                                                 s.coefficient * t.coefficient));
    }
  }
  return result;
}

Ordinal mex(std::span<const Ordinal> values) {
  std::vector<Ordinal> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Ordinal& x, const Ordinal& y) { return cmp(x, y) < 0; });
  Ordinal candidate;
  for (const Ordinal& v : sorted) {
    auto c = cmp(v, candidate);
    if (c == 0) {
      candidate = candidate.successor();
    } else if (c > 0) {
      break;
    }
  }
  return candidate;
}

namespace {

bool exponent_needs_parens(const Ordinal& e) {
  if (e.is_finite()) return false;
  if (e.terms().size() != 1) return true;
  if (e.terms()[0].coefficient != 1) return true;
  return exponent_needs_parens(e.terms()[0].exponent);
}

}  // namespace

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal::from_nat(1))) {
      out += '^';
      if (exponent_needs_parens(t.exponent)) {
        out += '(';
        out += to_string(t.exponent);
        out += ')';
      } else {
        out += to_string(t.exponent);
      }
    }
    if (t.coefficient != 1) {
      out += '*';
      out += t.coefficient.str();
    }
  }
  return out;
}

namespace {

struct OrdinalParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos, msg); }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  Nat parse_nat() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a natural number");
    }
    std::size_t start = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    return Nat(std::string(text.substr(start, pos - start)));
  }

  // exponent position: `w` [`^` exponent] | nat | `(` sum `)`
  Ordinal parse_exponent() {
    if (eof()) fail("expected an exponent");
    if (peek() == '(') {
      ++pos;
      Ordinal r = parse_sum();
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos;
      return r;
    }
    if (peek() == 'w') {
      ++pos;
      Ordinal e = Ordinal::from_nat(1);
      if (!eof() && peek() == '^') {
        ++pos;
        e = parse_exponent();
      }
      return Ordinal::omega_pow(e, 1);
    }
    return Ordinal::from_nat(parse_nat());
  }

  Ordinal::Term parse_term() {
    if (eof()) fail("expected a term");
    if (peek() == 'w') {
      ++pos;
      Ordinal e = Ordinal::from_nat(1);
      if (!eof() && peek() == '^') {
        ++pos;
        e = parse_exponent();
      }
      Nat c = 1;
      if (!eof() && peek() == '*') {
        ++pos;
        c = parse_nat();
        if (c.is_zero()) fail("coefficient must be >= 1");
      }
      return Ordinal::Term{std::move(e), std::move(c)};
    }
    Nat n = parse_nat();
    if (n.is_zero()) fail("0 is only valid as a whole literal");
    return Ordinal::Term{Ordinal(), std::move(n)};
  }

  Ordinal parse_sum() {
    std::vector<Ordinal::Term> terms;
    terms.push_back(parse_term());
    while (!eof() && peek() == '+') {
      ++pos;
      terms.push_back(parse_term());
    }
    // merge equal adjacent exponents (accepts e.g. `w+w` as `w*2`)
    std::vector<Ordinal::Term> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().exponent == t.exponent) {
        merged.back().coefficient += t.coefficient;
      } else {
        merged.push_back(std::move(t));
      }
    }
    for (std::size_t i = 1; i < merged.size(); ++i) {
      if (cmp(merged[i - 1].exponent, merged[i].exponent) <= 0) {
        fail("terms must be in strictly decreasing exponent order");
      }
    }
    return Ordinal::from_terms(std::move(merged));
  }

  Ordinal parse() {
    if (text == "0") return Ordinal();
    Ordinal r = parse_sum();
    if (!eof()) fail("trailing characters in ordinal literal");
    return r;
  }
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  OrdinalParser p{text};
  return p.parse();
}

std::size_t hash_value(const Ordinal& a) {
  std::size_t h = 0x5d1f0e3a;
  for (const auto& t : a.terms()) {
    h = hash_combine(h, hash_value(t.exponent));
    h = hash_combine(h, std::hash<std::string>{}(t.coefficient.str()));
  }
  return h;
}

}  // namespace surreal
