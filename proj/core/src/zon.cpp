#include "surreal/zon.hpp"

#include <algorithm>

namespace surreal {

Zon Zon::from_int(Int n) { return monomial(Ordinal(), std::move(n)); }

Zon Zon::from_ordinal(const Ordinal& a) {
  std::vector<Term> terms;
  for (const auto& t : a.terms()) terms.push_back({t.exponent, Int(t.coefficient)});
  return from_terms(std::move(terms));
}

Zon Zon::monomial(Ordinal exponent, Int coefficient) {
  return from_terms({Term{std::move(exponent), std::move(coefficient)}});
}

Zon Zon::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return cmp(x.exponent, y.exponent) > 0;
  });
  Zon z;
  for (Term& t : terms) {
    if (t.coefficient.is_zero()) continue;
    if (!z.terms_.empty() && z.terms_.back().exponent == t.exponent) {
      z.terms_.back().coefficient += t.coefficient;
      if (z.terms_.back().coefficient.is_zero()) z.terms_.pop_back();
    } else {
      z.terms_.push_back(std::move(t));
    }
  }
  return z;
}

Zon zon_add(const Zon& a, const Zon& b) {
  std::vector<Zon::Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Zon::from_terms(std::move(terms));
}

Zon zon_neg(const Zon& a) {
  std::vector<Zon::Term> terms = a.terms();
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return Zon::from_terms(std::move(terms));
}

Zon zon_sub(const Zon& a, const Zon& b) { return zon_add(a, zon_neg(b)); }

Zon zon_mul(const Zon& a, const Zon& b) {
  std::vector<Zon::Term> terms;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      terms.push_back({hessenberg_add(s.exponent, t.exponent),
                       s.coefficient * t.coefficient});
    }
  }
  return Zon::from_terms(std::move(terms));
}

int zon_cmp(const Zon& a, const Zon& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0;; ++i) {
    bool ea = i >= ta.size(), eb = i >= tb.size();
    if (ea && eb) return 0;
    if (!ea && !eb) {
      auto c = cmp(ta[i].exponent, tb[i].exponent);
      if (c != 0) {
        // the larger exponent's coefficient decides
        if (c > 0) return ta[i].coefficient > 0 ? 1 : -1;
        return tb[i].coefficient > 0 ? -1 : 1;
      }
      if (ta[i].coefficient != tb[i].coefficient) {
        return ta[i].coefficient < tb[i].coefficient ? -1 : 1;
      }
      continue;
    }
    const Int& lead = ea ? tb[i].coefficient : ta[i].coefficient;
    if (ea) return lead > 0 ? -1 : 1;
    return lead > 0 ? 1 : -1;
  }
}

SignWord zon_to_word(const Zon& a) {
  std::vector<Segment> segs;
  for (const auto& t : a.terms()) {
    Ordinal block = cantor_pow(Ordinal::omega(), t.exponent);
    Int c = t.coefficient;
    Sign s = c > 0 ? Sign::plus : Sign::minus;
    if (c < 0) c = -c;
    segs.push_back(Run{s, cantor_mul(block, Ordinal::from_nat(Nat(c)))});
  }
  return SignWord::from_segments(std::move(segs));
}

std::string to_string(const Zon& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    Int c = t.coefficient;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    first = false;
    Int mag = c < 0 ? Int(-c) : c;
    if (t.exponent.is_zero()) {
      out += mag.str();
      continue;
    }
    Ordinal expo = t.exponent;
    std::string head = to_string(Ordinal::omega_pow(expo, Nat(1)));
    out += head;
    if (mag != 1) out += "*" + mag.str();
  }
  return out;
}

}  // namespace surreal
