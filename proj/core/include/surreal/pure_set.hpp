#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "surreal/bigmath.hpp"
#include "surreal/ordinal.hpp"

namespace surreal {

// Hereditarily finite pure sets, hash-consed: equal structure means equal
// handle. Children are kept sorted by increasing Ackermann code, so each set
// has exactly one node and identity comparison is O(1).
class PureSet {
 public:
  PureSet();  // empty set

  static PureSet empty();
  static PureSet make(std::vector<PureSet> children);  // dedupes and sorts
  static PureSet von_neumann(std::size_t n);           // the ordinal n as a set

  bool is_empty() const;
  std::size_t rank() const;
  const std::vector<PureSet>& children() const;

  // stable per-process identity (creation index of the interned node)
  std::size_t id() const;

  bool operator==(const PureSet& o) const { return node_ == o.node_; }

  // total order matching the Ackermann code order
  static int code_cmp(const PureSet& a, const PureSet& b);

 private:
  struct Node;
  explicit PureSet(const Node* node) : node_(node) {}
  const Node* node_;
  friend struct PureSetAccess;
};

// Ackermann coding: code(s) = sum over children of 2^code(child).
PureSet ackermann_decode(const Nat& code);
Nat ackermann_code(const PureSet& s);  // ResourceLimit beyond the bit budget

enum class OutcomeI { zero_type, fuzzy };
OutcomeI classify(const PureSet& s);

// Grundy number: mex of the children's Grundy numbers (always finite here).
Ordinal grundy(const PureSet& s);

// The five associative sums definable by simultaneous recursion on options:
//   s1: { F*g, f*g }            s2: { F*g, f*G, f*g }
//   s3: { F*g, f*G }            (disjunctive sum)
//   s4: F u { F*g }             (ordinal sum on ordinals)
//   s5: F u G u { F*g } u { f*G }  (natural sum on ordinals)
enum class StarKind { s1, s2, s3, s4, s5 };
PureSet star_sum(StarKind kind, const PureSet& f, const PureSet& g);

// F.G = { f.G + F.g + f.g } with + the disjunctive sum.
PureSet iproduct(const PureSet& f, const PureSet& g);

// Budget on the number of distinct interned sets (default 1e6).
std::size_t pure_set_node_budget();
void set_pure_set_node_budget(std::size_t budget);
std::size_t pure_set_node_count();

// CLI literals: `#<code>` or `{<literal>,...}`; formatting shows depth-1
// children codes plus the code when it fits in the bit budget.
std::string to_string(const PureSet& s);
PureSet parse_pure_set(std::string_view text);

}  // namespace surreal
