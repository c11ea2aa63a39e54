#include "surreal/sign_word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace surreal {

namespace {

constexpr std::size_t kMaxSegments = 1u << 16;
constexpr std::size_t kMaxExpandedSymbols = 1u << 20;
constexpr std::size_t kRepeatBudget = 1u << 14;

const Ordinal& ord_one() {
  static const Ordinal o = Ordinal::from_nat(1);
  return o;
}

const Ordinal& ord_omega() {
  static const Ordinal o = Ordinal::omega();
  return o;
}

bool single_signed(const std::vector<Sign>& body) {
  return std::adjacent_find(body.begin(), body.end(),
                            [](Sign a, Sign b) { return a != b; }) == body.end();
}

std::vector<Sign> primitive_root(std::vector<Sign> body) {
  const std::size_t n = body.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = body[i] == body[i - d];
    }
    if (periodic) {
      body.resize(d);
      return body;
    }
  }
  return body;
}

// Canonical form: no zero runs, adjacent runs carry different signs, Rep
// bodies are primitive with both signs present, and the run before a Rep never
// ends (at a successor position) with the body's last sign -- the Rep absorbs
// to the left as far as it can.
std::vector<Segment> canonicalize(std::vector<Segment> in) {
  std::vector<Segment> out;
  auto push_run = [&out](Sign sign, const Ordinal& length) {
    if (length.is_zero()) return;
    if (!out.empty()) {
      if (Run* prev = std::get_if<Run>(&out.back()); prev && prev->sign == sign) {
        prev->length = cantor_add(prev->length, length);
        return;
      }
    }
    out.push_back(Run{sign, length});
  };
  for (Segment& seg : in) {
    if (Run* r = std::get_if<Run>(&seg)) {
      push_run(r->sign, r->length);
      continue;
    }
    Rep rep = std::get<Rep>(std::move(seg));
    if (rep.body.empty()) raise(errc::undefined, "empty repetition body");
    if (single_signed(rep.body)) {
      push_run(rep.body[0], ord_omega());
      continue;
    }
    rep.body = primitive_root(std::move(rep.body));
    while (!out.empty()) {
      Run* prev = std::get_if<Run>(&out.back());
      if (!prev || prev->sign != rep.body.back() || !prev->length.is_successor()) {
        break;
      }
      rep.body.insert(rep.body.begin(), rep.body.back());
      rep.body.pop_back();
      prev->length = prev->length.predecessor();
      if (prev->length.is_zero()) out.pop_back();
    }
    out.push_back(std::move(rep));
  }
  if (out.size() > kMaxSegments) raise(errc::resource_limit, "segment budget exhausted");
  return out;
}

Ordinal segment_length(const Segment& seg) {
  if (const Run* r = std::get_if<Run>(&seg)) return r->length;
  return ord_omega();
}

}  // namespace

SignWord SignWord::from_segments(std::vector<Segment> segments) {
  SignWord w;
  w.segs_ = canonicalize(std::move(segments));
  return w;
}

SignWord SignWord::run(Sign sign, Ordinal length) {
  if (length.is_zero()) return SignWord();
  return from_segments({Run{sign, std::move(length)}});
}

SignWord SignWord::from_signs(std::span<const Sign> signs) {
  std::vector<Segment> segs;
  for (Sign s : signs) segs.push_back(Run{s, ord_one()});
  return from_segments(std::move(segs));
}

Ordinal SignWord::birthday() const {
  Ordinal b;
  for (const Segment& seg : segs_) b = cantor_add(b, segment_length(seg));
  return b;
}

bool SignWord::runs_only() const {
  for (const Segment& seg : segs_) {
    if (std::holds_alternative<Rep>(seg)) return false;
  }
  return true;
}

bool SignWord::is_short() const {
  for (const Segment& seg : segs_) {
    const Run* r = std::get_if<Run>(&seg);
    if (!r || !r->length.is_finite()) return false;
  }
  return true;
}

namespace {

struct Cursor {
  const std::vector<Segment>* segs;
  std::size_t idx = 0;
  Ordinal consumed;     // inside a Run
  std::size_t off = 0;  // inside a Rep body

  bool done() const { return idx >= segs->size(); }
  bool in_rep() const {
    return !done() && std::holds_alternative<Rep>((*segs)[idx]);
  }
  const Rep& rep() const { return std::get<Rep>((*segs)[idx]); }

  Sign sign() const {
    if (const Run* r = std::get_if<Run>(&(*segs)[idx])) return r->sign;
    return rep().body[off];
  }

  // length of the same-sign block from here (Rep: up to the body end)
  Ordinal block_remaining() const {
    if (const Run* r = std::get_if<Run>(&(*segs)[idx])) {
      return left_sub(consumed, r->length);
    }
    const auto& body = rep().body;
    std::size_t k = 1;
    while (off + k < body.size() && body[off + k] == body[off]) ++k;
    return Ordinal::from_nat(Nat(k));
  }

  void advance(const Ordinal& k) {
    if (const Run* r = std::get_if<Run>(&(*segs)[idx])) {
      consumed = cantor_add(consumed, k);
      if (consumed == r->length) {
        ++idx;
        consumed = Ordinal();
      }
      return;
    }
    std::size_t kk = static_cast<std::size_t>(k.finite_value());
    off = (off + kk) % rep().body.size();
  }

  void skip_segment() {
    ++idx;
    consumed = Ordinal();
    off = 0;
  }
};

struct CompareOutcome {
  std::strong_ordering order = std::strong_ordering::equal;
  std::optional<Ordinal> delta;
};

CompareOutcome compare_impl(const SignWord& x, const SignWord& y) {
  if (x == y) return {};
  Cursor cx{&x.segments()}, cy{&y.segments()};
  Ordinal pos;
  while (true) {
    bool ex = cx.done(), ey = cy.done();
    if (ex && ey) return {};
    if (ex || ey) {
      Sign s = ex ? cy.sign() : cx.sign();
      bool x_smaller = ex ? (s == Sign::plus) : (s == Sign::minus);
      return {x_smaller ? std::strong_ordering::less : std::strong_ordering::greater,
              pos};
    }
    Sign sx = cx.sign(), sy = cy.sign();
    if (sx != sy) {
      return {sx == Sign::minus ? std::strong_ordering::less
                                : std::strong_ordering::greater,
              pos};
    }
    if (cx.in_rep() && cy.in_rep()) {
      // both periodic up to the same limit position: one lcm window decides
      const auto& bx = cx.rep().body;
      const auto& by = cy.rep().body;
      std::size_t window = std::lcm(bx.size(), by.size());
      for (std::size_t t = 1; t < window; ++t) {
        Sign a = bx[(cx.off + t) % bx.size()];
        Sign b = by[(cy.off + t) % by.size()];
        if (a != b) {
          Ordinal delta = cantor_add(pos, Ordinal::from_nat(Nat(t)));
          return {a == Sign::minus ? std::strong_ordering::less
                                   : std::strong_ordering::greater,
                  delta};
        }
      }
      cx.skip_segment();
      cy.skip_segment();
      pos = cantor_add(pos, ord_omega());
      continue;
    }
    Ordinal kx = cx.block_remaining();
    Ordinal ky = cy.block_remaining();
    const Ordinal& k = cmp(kx, ky) <= 0 ? kx : ky;
    cx.advance(k);
    cy.advance(k);
    pos = cantor_add(pos, k);
  }
}

}  // namespace

std::strong_ordering compare(const SignWord& x, const SignWord& y) {
  return compare_impl(x, y).order;
}

Ordinal discriminant(const SignWord& x, const SignWord& y) {
  CompareOutcome r = compare_impl(x, y);
  if (!r.delta) raise(errc::equal_inputs, "discriminant of equal numbers");
  return *r.delta;
}

std::optional<Sign> sign_at(const SignWord& w, const Ordinal& pos) {
  Ordinal cum;
  for (const Segment& seg : w.segments()) {
    Ordinal end = cantor_add(cum, segment_length(seg));
    if (cmp(pos, end) < 0) {
      if (const Run* r = std::get_if<Run>(&seg)) return r->sign;
      const Rep& rep = std::get<Rep>(seg);
      std::size_t t = static_cast<std::size_t>(left_sub(cum, pos).finite_value());
      return rep.body[t % rep.body.size()];
    }
    cum = end;
  }
  return std::nullopt;
}

SignWord from_ordinal_set(std::span<const Ordinal> elements) {
  if (elements.empty()) {
    raise(errc::empty_set, "the empty set is not a number");
  }
  std::vector<Ordinal> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Ordinal& a, const Ordinal& b) { return cmp(a, b) < 0; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Ordinal& bday = sorted.back();
  std::vector<Segment> segs;
  Ordinal prev;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    Ordinal gap = left_sub(prev, sorted[i]);
    if (!gap.is_zero()) segs.push_back(Run{Sign::minus, gap});
    segs.push_back(Run{Sign::plus, ord_one()});
    prev = sorted[i].successor();
  }
  Ordinal gap = left_sub(prev, bday);
  if (!gap.is_zero()) segs.push_back(Run{Sign::minus, gap});
  return SignWord::from_segments(std::move(segs));
}

std::vector<Ordinal> to_ordinal_set(const SignWord& w) {
  if (!w.is_short()) {
    raise(errc::not_representable,
          "ordinal-set view needs a short run-only word");
  }
  std::vector<Ordinal> out;
  unsigned long long pos = 0;
  for (const Segment& seg : w.segments()) {
    const Run& r = std::get<Run>(seg);
    unsigned long long len = r.length.finite_value().convert_to<unsigned long long>();
    if (len > kMaxExpandedSymbols) raise(errc::resource_limit, "word too long");
    if (r.sign == Sign::plus) {
      for (unsigned long long i = 0; i < len; ++i) {
        out.push_back(Ordinal::from_nat(Nat(pos + i)));
      }
    }
    pos += len;
  }
  out.push_back(Ordinal::from_nat(Nat(pos)));  // the birthday
  return out;
}

namespace {

struct PlacedRun {
  Sign sign;
  Ordinal length;
  Ordinal start;
};

struct Expansion {
  std::vector<PlacedRun> runs;
  bool complete = false;
};

// Expand the word into maximal sign blocks (merging across segment and
// repetition boundaries), up to max_runs blocks.
Expansion leading_runs(const SignWord& w, std::size_t max_runs) {
  Expansion e;
  Ordinal pos;
  auto push = [&](Sign sign, const Ordinal& length) {
    if (!e.runs.empty() && e.runs.back().sign == sign) {
      e.runs.back().length = cantor_add(e.runs.back().length, length);
    } else {
      e.runs.push_back(PlacedRun{sign, length, pos});
    }
    pos = cantor_add(pos, length);
  };
  for (const Segment& seg : w.segments()) {
    if (const Run* r = std::get_if<Run>(&seg)) {
      if (e.runs.size() > max_runs) return e;
      push(r->sign, r->length);
      continue;
    }
    const Rep& rep = std::get<Rep>(seg);
    while (true) {
      for (std::size_t i = 0; i < rep.body.size();) {
        std::size_t j = i + 1;
        while (j < rep.body.size() && rep.body[j] == rep.body[i]) ++j;
        push(rep.body[i], Ordinal::from_nat(Nat(j - i)));
        i = j;
      }
      if (e.runs.size() > max_runs) return e;
    }
  }
  e.complete = true;
  return e;
}

std::size_t tip_scan_budget(const SignWord& w) {
  std::size_t n = 4;
  for (const Segment& seg : w.segments()) {
    if (const Rep* rep = std::get_if<Rep>(&seg)) {
      n += 2 * rep->body.size() + 2;
    } else {
      n += 1;
    }
  }
  return n;
}

Ordinal tip_of(const SignWord& x) {
  if (x.is_zero()) return Ordinal();
  Expansion e = leading_runs(x, tip_scan_budget(x));
  for (std::size_t i = 0; i < e.runs.size(); ++i) {
    const PlacedRun& r = e.runs[i];
    if (r.sign != Sign::plus) continue;
    // start of a plus run right after a hole, at a successor position
    if (i > 0 && r.start.is_successor()) return r.start;
    // last position of a plus run followed by a hole
    bool followed = i + 1 < e.runs.size();
    if (followed && r.length.is_successor()) {
      return cantor_add(r.start, r.length.predecessor());
    }
  }
  return x.birthday();
}

Ordinal width_of(const SignWord& x) {
  Ordinal w;
  for (const Segment& seg : x.segments()) {
    if (const Run* r = std::get_if<Run>(&seg)) {
      if (r->sign == Sign::plus) w = cantor_add(w, r->length);
    } else {
      // a repetition holds infinitely many plusses
      w = cantor_add(w, ord_omega());
    }
  }
  return w;
}

InfiniteClass class_of(const SignWord& x) {
  if (x.is_zero()) return InfiniteClass::finite;
  Expansion e = leading_runs(x, 3);
  const PlacedRun& first = e.runs[0];
  bool first_infinite = cmp(first.length, ord_omega()) >= 0;
  if (first_infinite) {
    return first.sign == Sign::plus ? InfiniteClass::pos_infinite
                                    : InfiniteClass::neg_infinite;
  }
  if (first.length == ord_one() && e.runs.size() >= 2 &&
      cmp(e.runs[1].length, ord_omega()) >= 0) {
    return InfiniteClass::infinitesimal;
  }
  return InfiniteClass::finite;
}

}  // namespace

Quanta quanta(const SignWord& x) {
  Quanta q;
  q.birthday = x.birthday();
  q.tip = tip_of(x);
  q.integer_part = truncate(x, q.tip);
  if (x.is_zero()) {
    q.sign = 0;
  } else {
    q.sign = sign_at(x, Ordinal()) == Sign::plus ? 1 : -1;
  }
  q.width = width_of(x);
  q.infinite_class = class_of(x);
  return q;
}

TreeRelation tree_relate(const SignWord& x, const SignWord& y) {
  TreeRelation rel{false, false};
  if (x == y) {
    rel.descends = true;
    rel.initial = true;
    return rel;
  }
  Ordinal bx = x.birthday();
  if (cmp(bx, y.birthday()) > 0) return rel;
  CompareOutcome c = compare_impl(x, y);
  if (c.delta && cmp(*c.delta, bx) < 0) return rel;
  rel.descends = true;
  rel.initial = sign_at(y, bx) == Sign::plus;
  return rel;
}

SignWord yca(const SignWord& x, const SignWord& y) {
  if (x == y) raise(errc::equal_inputs, "youngest common ancestor of equal numbers");
  if (tree_relate(x, y).descends) return x;
  if (tree_relate(y, x).descends) return y;
  return truncate(x, discriminant(x, y));
}

namespace {

// segments of x strictly below position a (a <= birthday assumed by callers)
std::vector<Segment> prefix_segments(const SignWord& x, const Ordinal& a) {
  std::vector<Segment> out;
  Ordinal cum;
  for (const Segment& seg : x.segments()) {
    Ordinal end = cantor_add(cum, segment_length(seg));
    if (cmp(end, a) <= 0) {
      out.push_back(seg);
      cum = end;
      continue;
    }
    Ordinal keep = left_sub(cum, a);
    if (!keep.is_zero()) {
      if (const Run* r = std::get_if<Run>(&seg)) {
        out.push_back(Run{r->sign, keep});
      } else {
        const Rep& rep = std::get<Rep>(seg);
        std::size_t k = static_cast<std::size_t>(keep.finite_value());
        for (std::size_t i = 0; i < k; ++i) {
          out.push_back(Run{rep.body[i % rep.body.size()], ord_one()});
        }
      }
    }
    return out;
  }
  return out;
}

}  // namespace

SignWord truncate(const SignWord& x, const Ordinal& a) {
  if (cmp(x.birthday(), a) <= 0) return x;
  return SignWord::from_segments(prefix_segments(x, a));
}

SignWord suffix_from(const SignWord& x, const Ordinal& a) {
  if (cmp(a, x.birthday()) > 0) raise(errc::undefined, "suffix beyond the birthday");
  std::vector<Segment> out;
  Ordinal cum;
  std::size_t i = 0;
  const auto& segs = x.segments();
  for (; i < segs.size(); ++i) {
    Ordinal end = cantor_add(cum, segment_length(segs[i]));
    if (cmp(end, a) <= 0) {
      cum = end;
      continue;
    }
    Ordinal into = left_sub(cum, a);
    if (const Run* r = std::get_if<Run>(&segs[i])) {
      out.push_back(Run{r->sign, left_sub(into, r->length)});
    } else {
      const Rep& rep = std::get<Rep>(segs[i]);
      std::size_t k =
          static_cast<std::size_t>(into.finite_value()) % rep.body.size();
      std::vector<Sign> rotated(rep.body.begin() + k, rep.body.end());
      rotated.insert(rotated.end(), rep.body.begin(), rep.body.begin() + k);
      out.push_back(Rep{std::move(rotated)});
    }
    ++i;
    break;
  }
  for (; i < segs.size(); ++i) out.push_back(segs[i]);
  return SignWord::from_segments(std::move(out));
}

SignWord sharp(const SignWord& x) {
  std::vector<Segment> segs;
  for (const Segment& seg : x.segments()) {
    if (const Run* r = std::get_if<Run>(&seg)) {
      segs.push_back(Run{flip(r->sign), r->length});
    } else {
      Rep rep = std::get<Rep>(seg);
      for (Sign& s : rep.body) s = flip(s);
      segs.push_back(std::move(rep));
    }
  }
  return SignWord::from_segments(std::move(segs));
}

SignWord star(const SignWord& x) {
  if (x.is_zero()) return x;
  Sign first = *sign_at(x, Ordinal());
  SignWord interior = sharp(suffix_from(x, ord_one()));
  return concat_word(SignWord::run(first, ord_one()), interior);
}

SignWord child(const SignWord& x, Sign direction) {
  return concat_word(x, SignWord::run(direction, ord_one()));
}

SignWord concat_word(const SignWord& x, const SignWord& y) {
  std::vector<Segment> segs = x.segments();
  segs.insert(segs.end(), y.segments().begin(), y.segments().end());
  return SignWord::from_segments(std::move(segs));
}

namespace {

std::vector<Sign> expand_short(const SignWord& x) {
  std::vector<Sign> out;
  for (const Segment& seg : x.segments()) {
    const Run& r = std::get<Run>(seg);
    unsigned long long len = r.length.finite_value().convert_to<unsigned long long>();
    if (out.size() + len > kMaxExpandedSymbols) {
      raise(errc::resource_limit, "word too long to expand");
    }
    out.insert(out.end(), len, r.sign);
  }
  return out;
}

bool is_uniform(const SignWord& x) {
  return x.segments().size() == 1 &&
         std::holds_alternative<Run>(x.segments()[0]);
}

}  // namespace

SignWord repeat_word(const SignWord& x, const Ordinal& length) {
  if (x.is_zero() || length.is_zero()) return SignWord();
  if (is_uniform(x)) {
    const Run& r = std::get<Run>(x.segments()[0]);
    return SignWord::run(r.sign, cantor_mul(r.length, length));
  }
  DivRem d = div_rem_left(length, ord_omega());
  Nat finite_copies = d.remainder.finite_value();
  if (finite_copies > kRepeatBudget) raise(errc::resource_limit, "repetition too long");
  std::vector<Segment> segs;
  if (!d.quotient.is_zero()) {
    // the first w*q copies wrap into repetition blocks
    if (!x.is_short()) {
      raise(errc::unsupported_rep,
            "omega-repetition of a transfinite word is not representable");
    }
    if (!d.quotient.is_finite()) {
      raise(errc::unsupported_rep,
            "repetition length beyond w*k+n is not representable");
    }
    Nat blocks = d.quotient.finite_value();
    if (blocks > kRepeatBudget) raise(errc::resource_limit, "repetition too long");
    std::vector<Sign> body = expand_short(x);
    for (Nat i = 0; i < blocks; ++i) segs.push_back(Rep{body});
  }
  for (Nat i = 0; i < finite_copies; ++i) {
    segs.insert(segs.end(), x.segments().begin(), x.segments().end());
  }
  return SignWord::from_segments(std::move(segs));
}

SignWord mul_word(const SignWord& x, const SignWord& y) {
  if (x.is_zero() || y.is_zero()) return SignWord();
  SignWord neg = sharp(x);
  std::vector<Segment> segs;
  for (const Segment& seg : y.segments()) {
    if (const Run* r = std::get_if<Run>(&seg)) {
      const SignWord& factor = r->sign == Sign::plus ? x : neg;
      SignWord piece = repeat_word(factor, r->length);
      segs.insert(segs.end(), piece.segments().begin(), piece.segments().end());
    } else {
      if (!x.is_short()) {
        raise(errc::unsupported_rep,
              "omega-repetition of a transfinite word is not representable");
      }
      const Rep& rep = std::get<Rep>(seg);
      std::vector<Sign> body;
      std::vector<Sign> pos = expand_short(x);
      std::vector<Sign> negs = expand_short(neg);
      for (Sign s : rep.body) {
        const auto& block = s == Sign::plus ? pos : negs;
        body.insert(body.end(), block.begin(), block.end());
      }
      segs.push_back(Rep{std::move(body)});
    }
    if (segs.size() > kMaxSegments) raise(errc::resource_limit, "segment budget");
  }
  return SignWord::from_segments(std::move(segs));
}

SignWord pow_word(const SignWord& x, const SignWord& y) {
  if (!x.runs_only()) {
    raise(errc::unsupported_rep, "iterated product of a periodic word");
  }
  SignWord acc = word_one();
  for (const Segment& seg : y.segments()) {
    if (const Rep* rep = std::get_if<Rep>(&seg)) {
      (void)rep;
      if (x == word_one()) continue;
      raise(errc::unsupported_rep,
            "iterated product over a periodic exponent is not representable");
    }
    const Run& r = std::get<Run>(seg);
    SignWord factor = r.sign == Sign::plus ? x : star(x);
    if (r.length.is_finite()) {
      Nat n = r.length.finite_value();
      if (n > kRepeatBudget) raise(errc::resource_limit, "power too long");
      for (Nat i = 0; i < n; ++i) acc = mul_word(acc, factor);
      continue;
    }
    if (factor == word_one()) continue;
    if (is_uniform(factor) &&
        std::get<Run>(factor.segments()[0]).sign == Sign::plus) {
      const Run& fr = std::get<Run>(factor.segments()[0]);
      acc = mul_word(acc, SignWord::run(Sign::plus, cantor_pow(fr.length, r.length)));
      continue;
    }
    raise(errc::unsupported_rep,
          "transfinite iterated product leaves the representable class");
  }
  return acc;
}

SignWord cantor_word(WordOp op, const SignWord& x, const SignWord& y) {
  switch (op) {
    case WordOp::concat: return concat_word(x, y);
    case WordOp::mul: return mul_word(x, y);
    case WordOp::pow: return pow_word(x, y);
  }
  raise(errc::undefined, "bad word operation");
}

SignWord omega_map(const SignWord& x) {
  if (!x.runs_only()) {
    raise(errc::unsupported_rep, "monomial map of a periodic word");
  }
  std::vector<Segment> segs{Run{Sign::plus, ord_one()}};
  Ordinal width;
  for (const Segment& seg : x.segments()) {
    const Run& r = std::get<Run>(seg);
    if (r.sign == Sign::plus) {
      width = cantor_add(width, r.length);
      segs.push_back(Run{Sign::plus, cantor_pow(ord_omega(), width)});
    } else {
      Ordinal block = cantor_pow(ord_omega(), width.successor());
      segs.push_back(Run{Sign::minus, cantor_mul(block, r.length)});
    }
  }
  return SignWord::from_segments(std::move(segs));
}

SignWord limit_of_chain(std::span<const SignWord> chain) {
  if (chain.empty()) raise(errc::not_a_chain, "empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!tree_relate(chain[i], chain[i + 1]).descends) {
      raise(errc::not_a_chain, "elements are not descendance-increasing");
    }
  }
  return chain.back();
}

CanonicalCut canonical_cut(const SignWord& x) {
  if (!x.is_short()) {
    raise(errc::transfinite_unsupported, "canonical cut needs a finite birthday");
  }
  std::vector<Sign> symbols = expand_short(x);
  CanonicalCut cut;
  std::vector<Sign> prefix;
  for (Sign s : symbols) {
    SignWord t = SignWord::from_signs(prefix);
    (s == Sign::plus ? cut.left : cut.right).push_back(std::move(t));
    prefix.push_back(s);
  }
  return cut;
}

Decomposition decompose(const SignWord& x) {
  Decomposition d;
  Ordinal t = tip_of(x);
  d.int_frac = {truncate(x, t), suffix_from(x, t)};
  if (t == x.birthday()) {
    Ordinal lambda = t.limit_part();
    d.omnific = {{truncate(x, lambda), suffix_from(x, lambda)}};
  }
  return d;
}

SignWord word_zero() { return SignWord(); }
SignWord word_one() { return SignWord::run(Sign::plus, ord_one()); }
SignWord word_minus_one() { return SignWord::run(Sign::minus, ord_one()); }
SignWord word_half() {
  return SignWord::from_segments({Run{Sign::plus, ord_one()}, Run{Sign::minus, ord_one()}});
}
SignWord word_omega() { return SignWord::run(Sign::plus, ord_omega()); }
SignWord word_epsilon() {
  return SignWord::from_segments({Run{Sign::plus, ord_one()}, Run{Sign::minus, ord_omega()}});
}
SignWord word_from_int(long long n) {
  if (n >= 0) return SignWord::run(Sign::plus, Ordinal::from_nat(Nat(n)));
  return SignWord::run(Sign::minus, Ordinal::from_nat(Nat(-n)));
}

std::string to_string(const SignWord& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const Segment& seg : w.segments()) {
    if (const Run* r = std::get_if<Run>(&seg)) {
      char c = r->sign == Sign::plus ? '+' : '-';
      if (r->length.is_finite() && r->length.finite_value() <= 4) {
        unsigned n = r->length.finite_value().convert_to<unsigned>();
        out.append(n, c);
      } else {
        out += c;
        out += '^';
        std::string len = to_string(r->length);
        if (len.find('+') != std::string::npos) {
          out += '(' + len + ')';
        } else {
          out += len;
        }
      }
    } else {
      const Rep& rep = std::get<Rep>(seg);
      out += '(';
      for (Sign s : rep.body) out += s == Sign::plus ? '+' : '-';
      out += ")^w";
    }
  }
  return out;
}

namespace {

struct WordParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos, msg); }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  Ordinal parse_length() {
    if (!eof() && peek() == '(') {
      ++pos;
      std::size_t depth = 1, start = pos;
      while (!eof() && depth > 0) {
        if (peek() == '(') ++depth;
        if (peek() == ')') --depth;
        ++pos;
      }
      if (depth != 0) fail("unbalanced '(' in run length");
      std::string inner(text.substr(start, pos - 1 - start));
      try {
        return parse_ordinal(inner);
      } catch (const parse_error& e) {
        throw parse_error(start + e.pos(), e.what());
      }
    }
    std::size_t start = pos;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                      peek() == 'w' || peek() == '^' || peek() == '*')) {
      ++pos;
    }
    if (pos == start) fail("expected a run length");
    std::string token(text.substr(start, pos - start));
    try {
      return parse_ordinal(token);
    } catch (const parse_error& e) {
      throw parse_error(start + e.pos(), e.what());
    }
  }

  SignWord parse() {
    if (text == "0") return SignWord();
    std::vector<Segment> segs;
    while (!eof()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        Sign s = c == '+' ? Sign::plus : Sign::minus;
        Ordinal len = Ordinal::from_nat(1);
        if (!eof() && peek() == '^') {
          ++pos;
          len = parse_length();
        }
        if (len.is_zero()) fail("zero run length");
        segs.push_back(Run{s, std::move(len)});
        continue;
      }
      if (c == '(') {
        ++pos;
        std::vector<Sign> body;
        while (!eof() && peek() != ')') {
          char b = peek();
          if (b == '+' || b == '-') {
            ++pos;
            Sign s = b == '+' ? Sign::plus : Sign::minus;
            unsigned long long reps = 1;
            if (!eof() && peek() == '^') {
              ++pos;
              std::size_t start = pos;
              while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
              if (pos == start) fail("repetition bodies take finite run lengths");
              reps = std::stoull(std::string(text.substr(start, pos - start)));
              if (reps == 0 || reps > kMaxExpandedSymbols) fail("bad body run length");
            }
            body.insert(body.end(), reps, s);
            continue;
          }
          fail("expected '+', '-' or ')' in repetition body");
        }
        if (eof()) fail("unterminated repetition body");
        ++pos;  // ')'
        if (eof() || peek() != '^') fail("expected '^w' after repetition body");
        ++pos;
        if (eof() || peek() != 'w') fail("expected '^w' after repetition body");
        ++pos;
        if (body.empty()) fail("empty repetition body");
        segs.push_back(Rep{std::move(body)});
        continue;
      }
      fail("expected '+', '-' or '('");
    }
    if (segs.empty()) fail("empty sign word (write 0)");
    return SignWord::from_segments(std::move(segs));
  }
};

}  // namespace

SignWord parse_sign_word(std::string_view text) {
  WordParser p{text};
  return p.parse();
}

std::size_t hash_value(const SignWord& w) {
  std::size_t h = 0x2d3a91f7;
  for (const Segment& seg : w.segments()) {
    if (const Run* r = std::get_if<Run>(&seg)) {
      h = hash_combine(h, r->sign == Sign::plus ? 2 : 1);
      h = hash_combine(h, hash_value(r->length));
    } else {
      const Rep& rep = std::get<Rep>(seg);
      h = hash_combine(h, 3);
      for (Sign s : rep.body) h = hash_combine(h, s == Sign::plus ? 2 : 1);
    }
  }
  return h;
}

}  // namespace surreal
