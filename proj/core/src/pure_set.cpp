#include "surreal/pure_set.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace surreal {

struct PureSet::Node {
  std::vector<PureSet> children;  // sorted by increasing code order
  std::size_t rank = 0;
  std::size_t id = 0;
};

namespace {

constexpr unsigned kCodeBitBudget = 1u << 16;

}  // namespace

struct PureSetAccess {
  struct Interner {
    std::mutex mu;
    std::atomic<std::size_t> budget{1'000'000};
    std::vector<std::unique_ptr<PureSet::Node>> nodes;
    std::unordered_map<std::size_t, std::vector<const PureSet::Node*>> buckets;
  };

  static Interner& interner() {
    static Interner* i = new Interner;
    return *i;
  }

  static std::size_t key_hash(const std::vector<PureSet>& children) {
    std::size_t h = 0x811c9dc5;
    for (const PureSet& c : children) h = hash_combine(h, c.id());
    return h;
  }

  // children must already be sorted and duplicate-free
  static PureSet intern(std::vector<PureSet> children) {
    Interner& in = interner();
    std::scoped_lock lock(in.mu);
    std::size_t h = key_hash(children);
    auto& bucket = in.buckets[h];
    for (const PureSet::Node* n : bucket) {
      if (n->children == children) return PureSet(n);
    }
    if (in.nodes.size() >= in.budget.load()) {
      raise(errc::resource_limit, "pure set node budget exhausted");
    }
    auto node = std::make_unique<PureSet::Node>();
    std::size_t rank = 0;
    for (const PureSet& c : children) rank = std::max(rank, c.rank() + 1);
    node->children = std::move(children);
    node->rank = rank;
    node->id = in.nodes.size();
    const PureSet::Node* raw = node.get();
    in.nodes.push_back(std::move(node));
    bucket.push_back(raw);
    return PureSet(raw);
  }
};

PureSet::PureSet() { node_ = PureSetAccess::intern({}).node_; }

PureSet PureSet::empty() { return PureSet(); }

int PureSet::code_cmp(const PureSet& a, const PureSet& b) {
  if (a.node_ == b.node_) return 0;
  // codes compare like binary numbers: walk children from the largest down
  const auto& ca = a.children();
  const auto& cb = b.children();
  std::size_t i = ca.size(), j = cb.size();
  while (i > 0 && j > 0) {
    int c = code_cmp(ca[i - 1], cb[j - 1]);
    if (c != 0) return c;
    --i;
    --j;
  }
  if (i == j) return 0;
  return i < j ? -1 : 1;
}

PureSet PureSet::make(std::vector<PureSet> children) {
  std::sort(children.begin(), children.end(),
            [](const PureSet& x, const PureSet& y) { return code_cmp(x, y) < 0; });
  children.erase(std::unique(children.begin(), children.end()), children.end());
  return PureSetAccess::intern(std::move(children));
}

PureSet PureSet::von_neumann(std::size_t n) {
  std::vector<PureSet> below;
  PureSet current = empty();
  for (std::size_t i = 0; i < n; ++i) {
    below.push_back(current);
    current = make(below);
  }
  return current;
}

bool PureSet::is_empty() const { return node_->children.empty(); }
std::size_t PureSet::rank() const { return node_->rank; }
const std::vector<PureSet>& PureSet::children() const { return node_->children; }
std::size_t PureSet::id() const { return node_->id; }

std::size_t pure_set_node_budget() { return PureSetAccess::interner().budget.load(); }
void set_pure_set_node_budget(std::size_t budget) {
  PureSetAccess::interner().budget.store(budget);
}
std::size_t pure_set_node_count() {
  auto& in = PureSetAccess::interner();
  std::scoped_lock lock(in.mu);
  return in.nodes.size();
}

PureSet ackermann_decode(const Nat& code) {
  if (code < 0) raise(errc::undefined, "negative code");
  if (code > 0 && boost::multiprecision::msb(code) >= kCodeBitBudget) {
    raise(errc::resource_limit, "code too large to decode");
  }
  std::vector<PureSet> children;
  for (unsigned bit = 0; Nat(code >> bit) > 0; ++bit) {
    if (boost::multiprecision::bit_test(code, bit)) {
      children.push_back(ackermann_decode(Nat(bit)));
    }
  }
  return PureSet::make(std::move(children));
}

namespace {

std::mutex g_memo_mu;
std::unordered_map<std::size_t, Nat> g_code_memo;
std::unordered_map<std::size_t, unsigned long long> g_grundy_memo;
std::unordered_map<std::size_t, OutcomeI> g_classify_memo;

Nat code_of_locked(const PureSet& s) {
  auto it = g_code_memo.find(s.id());
  if (it != g_code_memo.end()) return it->second;
  Nat code = 0;
  for (const PureSet& c : s.children()) {
    Nat child = code_of_locked(c);
    if (child >= kCodeBitBudget) {
      raise(errc::resource_limit, "code exceeds the bit budget");
    }
    code += Nat(1) << static_cast<unsigned>(child);
  }
  g_code_memo.emplace(s.id(), code);
  return code;
}

}  // namespace

Nat ackermann_code(const PureSet& s) {
  std::scoped_lock lock(g_memo_mu);
  return code_of_locked(s);
}

OutcomeI classify(const PureSet& s) {
  {
    std::scoped_lock lock(g_memo_mu);
    auto it = g_classify_memo.find(s.id());
    if (it != g_classify_memo.end()) return it->second;
  }
  // zero type iff every option is fuzzy
  OutcomeI out = OutcomeI::zero_type;
  for (const PureSet& c : s.children()) {
    if (classify(c) == OutcomeI::zero_type) {
      out = OutcomeI::fuzzy;
      break;
    }
  }
  std::scoped_lock lock(g_memo_mu);
  g_classify_memo.emplace(s.id(), out);
  return out;
}

namespace {

unsigned long long grundy_nat(const PureSet& s) {
  {
    std::scoped_lock lock(g_memo_mu);
    auto it = g_grundy_memo.find(s.id());
    if (it != g_grundy_memo.end()) return it->second;
  }
  std::vector<unsigned long long> seen;
  seen.reserve(s.children().size());
  for (const PureSet& c : s.children()) seen.push_back(grundy_nat(c));
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  unsigned long long g = 0;
  for (unsigned long long v : seen) {
    if (v == g) {
      ++g;
    } else if (v > g) {
      break;
    }
  }
  std::scoped_lock lock(g_memo_mu);
  g_grundy_memo.emplace(s.id(), g);
  return g;
}

using PairKey = std::pair<std::size_t, std::size_t>;
struct PairHash {
  std::size_t operator()(const PairKey& k) const {
    return hash_combine(k.first, k.second);
  }
};

std::mutex g_sum_mu;
std::unordered_map<PairKey, PureSet, PairHash> g_sum_memo[5];
std::unordered_map<PairKey, PureSet, PairHash> g_prod_memo;

}  // namespace

Ordinal grundy(const PureSet& s) { return Ordinal::from_nat(Nat(grundy_nat(s))); }

PureSet star_sum(StarKind kind, const PureSet& f, const PureSet& g) {
  const int ki = static_cast<int>(kind);
  PairKey key{f.id(), g.id()};
  {
    std::scoped_lock lock(g_sum_mu);
    auto it = g_sum_memo[ki].find(key);
    if (it != g_sum_memo[ki].end()) return it->second;
  }
  std::vector<PureSet> options;
  switch (kind) {
    case StarKind::s1:
      for (const PureSet& go : g.children()) {
        options.push_back(star_sum(kind, f, go));
        for (const PureSet& fo : f.children()) {
          options.push_back(star_sum(kind, fo, go));
        }
      }
      break;
    case StarKind::s2:
      for (const PureSet& go : g.children()) options.push_back(star_sum(kind, f, go));
      for (const PureSet& fo : f.children()) options.push_back(star_sum(kind, fo, g));
      for (const PureSet& fo : f.children()) {
        for (const PureSet& go : g.children()) {
          options.push_back(star_sum(kind, fo, go));
        }
      }
      break;
    case StarKind::s3:
      for (const PureSet& go : g.children()) options.push_back(star_sum(kind, f, go));
      for (const PureSet& fo : f.children()) options.push_back(star_sum(kind, fo, g));
      break;
    case StarKind::s4:
      options = f.children();
      for (const PureSet& go : g.children()) options.push_back(star_sum(kind, f, go));
      break;
    case StarKind::s5:
      options = f.children();
      options.insert(options.end(), g.children().begin(), g.children().end());
      for (const PureSet& go : g.children()) options.push_back(star_sum(kind, f, go));
      for (const PureSet& fo : f.children()) options.push_back(star_sum(kind, fo, g));
      break;
  }
  PureSet result = PureSet::make(std::move(options));
  std::scoped_lock lock(g_sum_mu);
  g_sum_memo[ki].emplace(key, result);
  return result;
}

PureSet iproduct(const PureSet& f, const PureSet& g) {
  PairKey key{f.id(), g.id()};
  {
    std::scoped_lock lock(g_sum_mu);
    auto it = g_prod_memo.find(key);
    if (it != g_prod_memo.end()) return it->second;
  }
  std::vector<PureSet> options;
  for (const PureSet& fo : f.children()) {
    for (const PureSet& go : g.children()) {
      PureSet t = star_sum(StarKind::s3, iproduct(fo, g), iproduct(f, go));
      options.push_back(star_sum(StarKind::s3, t, iproduct(fo, go)));
    }
  }
  PureSet result = PureSet::make(std::move(options));
  std::scoped_lock lock(g_sum_mu);
  g_prod_memo.emplace(key, result);
  return result;
}

std::string to_string(const PureSet& s) {
  try {
    Nat code = ackermann_code(s);
    std::string out = "#" + code.str();
    if (!s.is_empty()) {
      out += " = {";
      bool first = true;
      for (const PureSet& c : s.children()) {
        if (!first) out += ',';
        first = false;
        out += "#" + ackermann_code(c).str();
      }
      out += '}';
    }
    return out;
  } catch (const domain_error&) {
    // code too large for the bit budget: fall back to nested braces
    std::string out = "{";
    bool first = true;
    for (const PureSet& c : s.children()) {
      if (!first) out += ',';
      first = false;
      try {
        out += "#" + ackermann_code(c).str();
      } catch (const domain_error&) {
        out += to_string(c);
      }
    }
    out += '}';
    return out;
  }
}

namespace {

struct PureSetParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos, msg); }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  PureSet parse_one() {
    if (eof()) fail("expected a pure set literal");
    if (peek() == '#') {
      ++pos;
      std::size_t start = pos;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
      if (pos == start) fail("expected a code after '#'");
      return ackermann_decode(Nat(std::string(text.substr(start, pos - start))));
    }
    if (peek() == '{') {
      ++pos;
      std::vector<PureSet> children;
      if (!eof() && peek() == '}') {
        ++pos;
        return PureSet::make(std::move(children));
      }
      while (true) {
        children.push_back(parse_one());
        if (eof()) fail("expected ',' or '}'");
        if (peek() == ',') {
          ++pos;
          continue;
        }
        if (peek() == '}') {
          ++pos;
          return PureSet::make(std::move(children));
        }
        fail("expected ',' or '}'");
      }
    }
    fail("expected '#' or '{'");
  }

  PureSet parse() {
    PureSet s = parse_one();
    if (!eof()) fail("trailing characters in pure set literal");
    return s;
  }
};

}  // namespace

PureSet parse_pure_set(std::string_view text) {
  PureSetParser p{text};
  return p.parse();
}

}  // namespace surreal
