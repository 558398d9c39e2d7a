#pragma once

// Charged multipartitions and their combinatorics: nodes, skew diagrams,
// beta numbers on the e-runner abacus, ribbon moves, tableaux and their
// residue words, distillation up to translation, and the Fock operators.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "klr/basics.hpp"
#include "klr/root_system.hpp"

namespace klr {

// A node in absolute coordinates: rows grow to the south, columns to the
// east, and comp is the 1-based component index. A component with charge
// kappa has its corner node at (1, kappa + 1), so the charge is already
// baked into the column of every node derived from a multipartition.
struct Node {
  Int row = 0;
  Int col = 0;
  Int comp = 1;

  friend bool operator==(const Node& a, const Node& b) = default;
  // Row-reading order: by component, then row, then column.
  friend bool operator<(const Node& a, const Node& b);
};

inline Node north(Node u) { return {u.row - 1, u.col, u.comp}; }
inline Node south(Node u) { return {u.row + 1, u.col, u.comp}; }
inline Node east(Node u) { return {u.row, u.col + 1, u.comp}; }
inline Node west(Node u) { return {u.row, u.col - 1, u.comp}; }

Int residue(Int e, const Node& u);  // (col - row) mod e

// u southeast-reaches v: same component, v weakly south and weakly east.
bool southeast(const Node& u, const Node& v);

// A finite set of nodes closed under betweenness: whenever u and w belong to
// the set and u southeast-reaches w, the whole rectangle between them does
// too. Nodes are stored sorted in row-reading order without duplicates.
class SkewDiagram {
 public:
  SkewDiagram() = default;
  explicit SkewDiagram(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  bool contains(const Node& u) const;
  Int size() const { return (Int)nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  friend bool operator==(const SkewDiagram& a, const SkewDiagram& b) = default;
  friend bool operator<(const SkewDiagram& a, const SkewDiagram& b);

 private:
  std::vector<Node> nodes_;
};

RootVector content(Int e, const SkewDiagram& tau);
Int row_count(const SkewDiagram& tau);     // distinct (comp, row) pairs
Int column_count(const SkewDiagram& tau);  // distinct (comp, col) pairs
// Nonempty, one component, edge-connected, and no 2x2 square.
bool is_ribbon(const SkewDiagram& tau);

// sum_r c_{kappa_r mod e} - (1/2) sum_i (c_i - c_{i+1})^2 for the content c.
Int defect(const RootVector& content, const std::vector<Int>& charges);

// A tuple of partitions with one integer charge per component.
class Multipartition {
 public:
  Multipartition(Int e, std::vector<Int> charges, PartitionTuple parts);

  Int e() const { return e_; }
  const std::vector<Int>& charges() const { return charges_; }
  const PartitionTuple& parts() const { return parts_; }
  Int level() const { return (Int)parts_.size(); }
  Int size() const;

  std::vector<Node> nodes() const;  // row-reading order
  SkewDiagram diagram() const;
  RootVector content() const;
  Int defect() const;

  friend bool operator==(const Multipartition& a, const Multipartition& b) = default;
  // Lexicographic on (e, charges, parts); used for canonical map keys.
  friend bool operator<(const Multipartition& a, const Multipartition& b);

 private:
  Int e_ = 0;
  std::vector<Int> charges_;
  PartitionTuple parts_;
};

// The nodes of outer not in inner; both must share e, charges, and level,
// and inner must fit inside outer row by row.
SkewDiagram skew_of(const Multipartition& outer, const Multipartition& inner);

// Dominance comparison of the first argument against the second.
Cmp dominance(const PartitionTuple& a, const PartitionTuple& b);
Cmp dominance(const Multipartition& a, const Multipartition& b);

// The beta numbers of a charged multipartition: for each component r the
// infinite set {kappa_r mod e + part_a - a : a >= 1}, represented by a base
// below which every integer is present plus the finite set of members above.
// Values on runner i are those congruent to i mod e.
class BetaSet {
 public:
  BetaSet(Int e, std::vector<Int> charges, const PartitionTuple& parts);

  // Build the unique set whose largest value on runner i of component r is
  // maxima[r-1][i]; the maxima must be congruent to their runner index and
  // consistent with the given charges. Every runner is fully filled below
  // its maximum, so the result is always a multicore.
  static BetaSet from_runner_maxima(Int e, std::vector<Int> charges,
                                    const std::vector<std::vector<Int>>& maxima);

  // Build directly from the internal description: per component, a base
  // below which every integer is present plus the members at or above it.
  static BetaSet from_members(Int e, std::vector<Int> charges,
                              const std::vector<std::pair<Int, std::vector<Int>>>& comps);

  Int e() const { return e_; }
  Int level() const { return (Int)comps_.size(); }
  const std::vector<Int>& charges() const { return charges_; }

  bool contains(Int r, Int x) const;
  Int lowest_gap(Int r) const;                  // least absent value of component r
  std::vector<Int> members_above(Int r) const;  // ascending members above that gap
  Int runner_max(Int r, Int i) const;           // largest value on runner i
  Int hook_shift(Int r, Int i, Int j) const;    // floor of (max_j - max_i)/e
  Int runner_value(Int r, Int i, Int q) const;  // q-th largest on runner i, q >= 1
  // The leading descending values of component r; everything at or below the
  // last returned value is present. Default count covers one full residue
  // sweep past the explicit members.
  std::vector<Int> window(Int r, Int count = 0) const;

  // Move one member from `from` (present) to `to` (absent).
  BetaSet with_move(Int r, Int from, Int to) const;
  Multipartition to_multipartition() const;

 private:
  struct Comp {
    Int base = 0;          // every integer < base is in the set
    std::set<Int> above;   // members >= base; base itself is never a member
  };

  BetaSet() = default;
  const Comp& comp(Int r) const;

  Int e_ = 0;
  std::vector<Int> charges_;
  std::vector<Comp> comps_;
};

BetaSet beta_numbers(const Multipartition& lam);

// One ribbon move on the abacus. For a removable ribbon x is a gap and y a
// member; dropping y to x removes `ribbon` from the multipartition, leaving
// `result`. For an addable ribbon x is a member and y a gap; lifting x to y
// adjoins `ribbon`, giving `result`. The content is always
// alpha_interval((x+1) mod e, y - x).
struct RibbonMove {
  Int x = 0;
  Int y = 0;
  Int comp = 1;
  SkewDiagram ribbon;
  RootVector content;
  Multipartition result;
};

// All removable ribbons, in ascending witness order (x, y, comp).
std::vector<RibbonMove> removable_ribbons(const Multipartition& lam);
// Addable ribbons of length at most max_len (3e when max_len <= 0); the full
// set is infinite. Ascending witness order.
std::vector<RibbonMove> addable_ribbons(const Multipartition& lam, Int max_len = 0);
// The subsets with a prescribed content, which pins the ribbon length.
std::vector<RibbonMove> removable_ribbons_of_content(const Multipartition& lam,
                                                     const RootVector& beta);
std::vector<RibbonMove> addable_ribbons_of_content(const Multipartition& lam,
                                                   const RootVector& beta);

// A filling of a skew diagram by 1..n such that southeast moves only ever
// point at larger entries.
class StandardTableau {
 public:
  StandardTableau(SkewDiagram shape, std::vector<Node> order);

  const SkewDiagram& shape() const { return shape_; }
  const std::vector<Node>& order() const { return order_; }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) = default;

 private:
  SkewDiagram shape_;
  std::vector<Node> order_;
};

// The tableau filling nodes in row-reading order.
StandardTableau leading_tableau(const SkewDiagram& tau);
// The residues of t(1), t(2), ... as a word.
Word tableau_word(Int e, const StandardTableau& t);
// A standard tableau of shape tau whose residue word is w, if any exists.
std::optional<StandardTableau> is_word_in(Int e, const SkewDiagram& tau, const Word& w);

// Split tau into edge-connected pieces and order them with the most
// northeasterly piece of the earliest component first. Fails unless every
// two pieces sharing a component are strictly northeast-separated. Each
// piece is returned as a single-component diagram translated to canonical
// position: top row 1, leftmost column in [1, e], residues preserved.
std::vector<SkewDiagram> distill(Int e, const SkewDiagram& tau);
// Equal distillations piece by piece.
bool similar(Int e, const SkewDiagram& a, const SkewDiagram& b);

// A finitely supported integer combination of multipartitions sharing one
// (e, charges) frame.
class FockVector {
 public:
  FockVector() = default;

  void add(const Multipartition& lam, Int coeff);
  Int coeff(const Multipartition& lam) const;
  const std::map<Multipartition, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const FockVector& a, const FockVector& b) = default;

 private:
  std::map<Multipartition, Int> terms_;
};

enum class FockOp { lower, raise };  // f_beta adjoins ribbons, e_beta removes them

// Apply f_beta or e_beta for a real root vector beta: signed sum over the
// addable (resp. removable) ribbons of content beta, each term weighted by
// (-1)^(columns + 1), extended linearly.
FockVector fock_apply(FockOp op, const RootVector& beta, const FockVector& v);
FockVector fock_apply(FockOp op, const RootVector& beta, const Multipartition& lam);

}  // namespace klr
