#include "klr/diagrams.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

namespace klr {

bool operator<(const Node& a, const Node& b) {
  if (a.comp != b.comp) return a.comp < b.comp;
  if (a.row != b.row) return a.row < b.row;
  return a.col < b.col;
}

Int residue(Int e, const Node& u) {
  require(e >= 2, "e must be at least 2");
  return imod(u.col - u.row, e);
}

bool southeast(const Node& u, const Node& v) {
  return u.comp == v.comp && v.row >= u.row && v.col >= u.col;
}

SkewDiagram::SkewDiagram(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  for (const Node& u : nodes_) require(u.comp >= 1, "component indices are 1-based");

  // Betweenness per component: rows must be solid column intervals, and for
  // any two rows joined by a southeast pair, every row between them must
  // cover the columns that pair spans.
  struct Row {
    Int row, lo, hi, cnt;
  };
  std::map<Int, std::vector<Row>> by_comp;
  for (const Node& u : nodes_) {
    auto& rows = by_comp[u.comp];
    if (!rows.empty() && rows.back().row == u.row) {
      rows.back().hi = u.col;
      ++rows.back().cnt;
    } else {
      rows.push_back({u.row, u.col, u.col, 1});
    }
  }
  for (const auto& [c, rows] : by_comp) {
    for (const Row& r : rows)
      require(r.cnt == r.hi - r.lo + 1, "skew diagram rows must be solid column intervals");
    for (size_t i = 0; i < rows.size(); ++i) {
      for (size_t j = i + 1; j < rows.size(); ++j) {
        if (rows[i].lo > rows[j].hi) continue;  // no southeast pair across these rows
        require(rows[j].row - rows[i].row == (Int)(j - i),
                "skew diagram violates betweenness: a row between two others is empty");
        for (size_t k = i; k <= j; ++k)
          require(rows[k].lo <= rows[i].lo && rows[k].hi >= rows[j].hi,
                  "skew diagram violates betweenness");
      }
    }
  }
}

bool SkewDiagram::contains(const Node& u) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), u);
}

bool operator<(const SkewDiagram& a, const SkewDiagram& b) {
  return a.nodes_ < b.nodes_;
}

RootVector content(Int e, const SkewDiagram& tau) {
  require(e >= 2, "e must be at least 2");
  std::vector<Int> coeffs(e, 0);
  for (const Node& u : tau.nodes()) ++coeffs[residue(e, u)];
  return RootVector(e, std::move(coeffs));
}

Int row_count(const SkewDiagram& tau) {
  std::set<std::pair<Int, Int>> seen;
  for (const Node& u : tau.nodes()) seen.insert({u.comp, u.row});
  return (Int)seen.size();
}

Int column_count(const SkewDiagram& tau) {
  std::set<std::pair<Int, Int>> seen;
  for (const Node& u : tau.nodes()) seen.insert({u.comp, u.col});
  return (Int)seen.size();
}

bool is_ribbon(const SkewDiagram& tau) {
  if (tau.empty()) return false;
  const auto& ns = tau.nodes();
  for (const Node& u : ns) {
    if (u.comp != ns[0].comp) return false;
    if (tau.contains(east(u)) && tau.contains(south(u)) && tau.contains(south(east(u))))
      return false;
  }
  std::set<Node> seen{ns[0]};
  std::vector<Node> stack{ns[0]};
  while (!stack.empty()) {
    Node u = stack.back();
    stack.pop_back();
    for (Node v : {north(u), south(u), east(u), west(u)})
      if (tau.contains(v) && seen.insert(v).second) stack.push_back(v);
  }
  return (Int)seen.size() == tau.size();
}

Int defect(const RootVector& content, const std::vector<Int>& charges) {
  require(content.e >= 2, "content must carry a valid e");
  require(!charges.empty(), "at least one charge is needed");
  Int head = 0;
  for (Int k : charges) head += content.at(imod(k, content.e));
  Int sq = 0;
  for (Int i = 0; i < content.e; ++i) {
    Int d = content.at(i) - content.at(i + 1);
    sq += d * d;
  }
  internal_check(sq % 2 == 0, "the cyclic difference square sum must be even");
  return head - sq / 2;
}

Multipartition::Multipartition(Int e, std::vector<Int> charges, PartitionTuple parts)
    : e_(e), charges_(std::move(charges)), parts_(std::move(parts)) {
  require(e_ >= 2, "e must be at least 2");
  require(!parts_.empty(), "a multipartition has at least one component");
  require(charges_.size() == parts_.size(), "need exactly one charge per component");
  for (const Partition& p : parts_) require_partition(p);
}

Int Multipartition::size() const { return size_of(parts_); }

std::vector<Node> Multipartition::nodes() const {
  std::vector<Node> out;
  for (Int r = 1; r <= level(); ++r) {
    Int kappa = charges_[r - 1];
    const Partition& p = parts_[r - 1];
    for (Int a = 1; a <= (Int)p.size(); ++a)
      for (Int j = 1; j <= p[a - 1]; ++j) out.push_back({a, kappa + j, r});
  }
  return out;
}

SkewDiagram Multipartition::diagram() const { return SkewDiagram(nodes()); }

RootVector Multipartition::content() const {
  std::vector<Int> coeffs(e_, 0);
  for (const Node& u : nodes()) ++coeffs[residue(e_, u)];
  return RootVector(e_, std::move(coeffs));
}

Int Multipartition::defect() const { return klr::defect(content(), charges_); }

bool operator<(const Multipartition& a, const Multipartition& b) {
  if (a.e_ != b.e_) return a.e_ < b.e_;
  if (a.charges_ != b.charges_) return a.charges_ < b.charges_;
  return a.parts_ < b.parts_;
}

SkewDiagram skew_of(const Multipartition& outer, const Multipartition& inner) {
  require(outer.e() == inner.e() && outer.charges() == inner.charges(),
          "skew difference needs matching e and charges");
  std::vector<Node> diff;
  for (Int r = 1; r <= outer.level(); ++r) {
    const Partition& po = outer.parts()[r - 1];
    const Partition& pi = inner.parts()[r - 1];
    Int kappa = outer.charges()[r - 1];
    Int rows = (Int)std::max(po.size(), pi.size());
    for (Int a = 1; a <= rows; ++a) {
      Int o = part_at(po, a), in = part_at(pi, a);
      require(in <= o, "inner multipartition must fit inside the outer one");
      for (Int j = in + 1; j <= o; ++j) diff.push_back({a, kappa + j, r});
    }
  }
  return SkewDiagram(std::move(diff));
}

Cmp dominance(const PartitionTuple& a, const PartitionTuple& b) {
  require(a.size() == b.size(), "dominance needs equal levels");
  require(size_of(a) == size_of(b), "dominance needs equal sizes");
  if (a == b) return Cmp::equal;
  if (dominates(a, b)) return Cmp::greater;
  if (dominates(b, a)) return Cmp::less;
  return Cmp::incomparable;
}

Cmp dominance(const Multipartition& a, const Multipartition& b) {
  require(a.e() == b.e() && a.charges() == b.charges(),
          "dominance compares multipartitions in one charge frame");
  return dominance(a.parts(), b.parts());
}

BetaSet::BetaSet(Int e, std::vector<Int> charges, const PartitionTuple& parts)
    : e_(e), charges_(std::move(charges)) {
  require(e_ >= 2, "e must be at least 2");
  require(!charges_.empty() && charges_.size() == parts.size(),
          "need exactly one charge per component");
  comps_.reserve(parts.size());
  for (size_t r = 0; r < parts.size(); ++r) {
    require_partition(parts[r]);
    Int kbar = imod(charges_[r], e_);
    Int len = (Int)parts[r].size();
    Comp c;
    c.base = kbar - len;
    for (Int a = 1; a <= len; ++a) c.above.insert(kbar + parts[r][a - 1] - a);
    internal_check((Int)c.above.size() == len, "beta values must be distinct");
    comps_.push_back(std::move(c));
  }
}

BetaSet BetaSet::from_members(Int e, std::vector<Int> charges,
                              const std::vector<std::pair<Int, std::vector<Int>>>& comps) {
  BetaSet B;
  B.e_ = e;
  B.charges_ = std::move(charges);
  require(e >= 2, "e must be at least 2");
  require(!B.charges_.empty() && B.charges_.size() == comps.size(),
          "need exactly one charge per component");
  for (size_t r = 0; r < comps.size(); ++r) {
    Comp c;
    c.base = comps[r].first;
    for (Int v : comps[r].second) {
      require(v >= c.base, "members must lie at or above the base");
      require(c.above.insert(v).second, "members must be distinct");
    }
    while (c.above.count(c.base)) {
      c.above.erase(c.base);
      ++c.base;
    }
    // The set pins an absolute charge, not just a residue class: a shifted
    // copy of the right congruence class would decode as a different charge.
    Int charge = c.base + (Int)c.above.size();
    require(charge == imod(B.charges_[r], e),
            "members are inconsistent with the component charge");
    B.comps_.push_back(std::move(c));
  }
  return B;
}

BetaSet BetaSet::from_runner_maxima(Int e, std::vector<Int> charges,
                                    const std::vector<std::vector<Int>>& maxima) {
  require(e >= 2, "e must be at least 2");
  require(!maxima.empty() && charges.size() == maxima.size(),
          "need one row of runner maxima per component");
  std::vector<std::pair<Int, std::vector<Int>>> comps;
  for (size_t r = 0; r < maxima.size(); ++r) {
    require((Int)maxima[r].size() == e, "need one maximum per runner");
    Int lo = maxima[r][0];
    for (Int i = 0; i < e; ++i) {
      require(imod(maxima[r][i], e) == i, "a runner maximum must sit on its own runner");
      lo = std::min(lo, maxima[r][i]);
    }
    std::vector<Int> members;
    for (Int i = 0; i < e; ++i)
      for (Int v = maxima[r][i]; v >= lo; v -= e) members.push_back(v);
    comps.push_back({lo, std::move(members)});
  }
  return from_members(e, std::move(charges), comps);
}

const BetaSet::Comp& BetaSet::comp(Int r) const {
  require(r >= 1 && r <= level(), "component index out of range");
  return comps_[r - 1];
}

bool BetaSet::contains(Int r, Int x) const {
  const Comp& c = comp(r);
  return x < c.base || c.above.count(x) > 0;
}

Int BetaSet::lowest_gap(Int r) const { return comp(r).base; }

std::vector<Int> BetaSet::members_above(Int r) const {
  const Comp& c = comp(r);
  return std::vector<Int>(c.above.begin(), c.above.end());
}

Int BetaSet::runner_max(Int r, Int i) const {
  require(i >= 0 && i < e_, "residue out of range");
  const Comp& c = comp(r);
  for (auto it = c.above.rbegin(); it != c.above.rend(); ++it)
    if (imod(*it, e_) == i) return *it;
  return c.base - 1 - imod(c.base - 1 - i, e_);
}

Int BetaSet::hook_shift(Int r, Int i, Int j) const {
  return fdiv(runner_max(r, j) - runner_max(r, i), e_);
}

Int BetaSet::runner_value(Int r, Int i, Int q) const {
  require(i >= 0 && i < e_, "residue out of range");
  require(q >= 1, "runner positions are 1-based");
  const Comp& c = comp(r);
  Int seen = 0;
  for (auto it = c.above.rbegin(); it != c.above.rend(); ++it)
    if (imod(*it, e_) == i && ++seen == q) return *it;
  Int top = c.base - 1 - imod(c.base - 1 - i, e_);
  return top - (q - 1 - seen) * e_;
}

std::vector<Int> BetaSet::window(Int r, Int count) const {
  const Comp& c = comp(r);
  if (count <= 0) count = (Int)c.above.size() + e_;
  std::vector<Int> out;
  out.reserve(count);
  for (auto it = c.above.rbegin(); it != c.above.rend() && (Int)out.size() < count; ++it)
    out.push_back(*it);
  Int v = c.base - 1;
  while ((Int)out.size() < count) out.push_back(v--);
  return out;
}

BetaSet BetaSet::with_move(Int r, Int from, Int to) const {
  require(contains(r, from), "can only move a value that is present");
  require(!contains(r, to), "can only move onto a value that is absent");
  BetaSet out = *this;
  Comp& c = out.comps_[r - 1];
  if (from < c.base) {
    for (Int v = from + 1; v < c.base; ++v) c.above.insert(v);
    c.base = from;
  } else {
    c.above.erase(from);
  }
  c.above.insert(to);
  while (c.above.count(c.base)) {
    c.above.erase(c.base);
    ++c.base;
  }
  return out;
}

Multipartition BetaSet::to_multipartition() const {
  PartitionTuple parts;
  for (Int r = 1; r <= level(); ++r) {
    const Comp& c = comp(r);
    internal_check(c.base + (Int)c.above.size() == imod(charges_[r - 1], e_),
                   "beta set drifted off its charge");
    // The a-th part counts the gaps below the a-th largest member; all gaps
    // sit at or above the base, so members below the base contribute zero.
    Partition p;
    std::vector<Int> asc(c.above.begin(), c.above.end());
    for (Int idx = (Int)asc.size() - 1; idx >= 0; --idx) {
      Int gaps = (asc[idx] - c.base) - idx;
      if (gaps == 0) break;
      p.push_back(gaps);
    }
    internal_check(is_partition(p), "beta reconstruction must yield a partition");
    parts.push_back(std::move(p));
  }
  return Multipartition(e_, charges_, parts);
}

BetaSet beta_numbers(const Multipartition& lam) {
  return BetaSet(lam.e(), lam.charges(), lam.parts());
}

namespace {

RibbonMove build_move(const Multipartition& lam, const BetaSet& B, Int r, Int x, Int y,
                      bool removing) {
  BetaSet moved = removing ? B.with_move(r, y, x) : B.with_move(r, x, y);
  Multipartition other = moved.to_multipartition();
  SkewDiagram ribbon = removing ? skew_of(lam, other) : skew_of(other, lam);
  RootVector cont = alpha_interval(lam.e(), imod(x + 1, lam.e()), y - x);
  internal_check(content(lam.e(), ribbon) == cont,
                 "ribbon content disagrees with its bead move");
  internal_check(is_ribbon(ribbon), "a bead move must carve out a single ribbon");
  Int between = 0;
  for (Int z = x + 1; z < y; ++z)
    if (B.contains(r, z)) ++between;
  internal_check(row_count(ribbon) == between + 1,
                 "ribbon row count disagrees with its bead move");
  return RibbonMove{x, y, r, std::move(ribbon), std::move(cont), std::move(other)};
}

std::vector<RibbonMove> build_all(const Multipartition& lam, const BetaSet& B,
                                  std::vector<std::array<Int, 3>> wits, bool removing) {
  std::sort(wits.begin(), wits.end());
  std::vector<RibbonMove> out;
  out.reserve(wits.size());
  for (const auto& w : wits) out.push_back(build_move(lam, B, w[2], w[0], w[1], removing));
  return out;
}

}  // namespace

std::vector<RibbonMove> removable_ribbons(const Multipartition& lam) {
  BetaSet B = beta_numbers(lam);
  std::vector<std::array<Int, 3>> wits;
  for (Int r = 1; r <= lam.level(); ++r) {
    Int base = B.lowest_gap(r);
    for (Int y : B.members_above(r))
      for (Int x = base; x < y; ++x)
        if (!B.contains(r, x)) wits.push_back({x, y, r});
  }
  return build_all(lam, B, std::move(wits), true);
}

std::vector<RibbonMove> addable_ribbons(const Multipartition& lam, Int max_len) {
  Int cap = max_len > 0 ? max_len : 3 * lam.e();
  BetaSet B = beta_numbers(lam);
  std::vector<std::array<Int, 3>> wits;
  for (Int r = 1; r <= lam.level(); ++r) {
    Int base = B.lowest_gap(r);
    std::vector<Int> beads = B.members_above(r);
    for (Int x = base - cap; x < base; ++x) beads.push_back(x);
    for (Int x : beads)
      for (Int y = x + 1; y <= x + cap; ++y)
        if (!B.contains(r, y)) wits.push_back({x, y, r});
  }
  return build_all(lam, B, std::move(wits), false);
}

std::vector<RibbonMove> removable_ribbons_of_content(const Multipartition& lam,
                                                     const RootVector& beta) {
  require(beta.e == lam.e(), "content must share the multipartition's e");
  Int L = beta.height();
  std::vector<std::array<Int, 3>> wits;
  BetaSet B = beta_numbers(lam);
  if (L >= 1) {
    for (Int r = 1; r <= lam.level(); ++r)
      for (Int y : B.members_above(r)) {
        Int x = y - L;
        if (!B.contains(r, x) && alpha_interval(lam.e(), imod(x + 1, lam.e()), L) == beta)
          wits.push_back({x, y, r});
      }
  }
  return build_all(lam, B, std::move(wits), true);
}

std::vector<RibbonMove> addable_ribbons_of_content(const Multipartition& lam,
                                                   const RootVector& beta) {
  require(beta.e == lam.e(), "content must share the multipartition's e");
  Int L = beta.height();
  std::vector<std::array<Int, 3>> wits;
  BetaSet B = beta_numbers(lam);
  if (L >= 1) {
    for (Int r = 1; r <= lam.level(); ++r) {
      Int base = B.lowest_gap(r);
      std::vector<Int> beads = B.members_above(r);
      for (Int x = base - L; x < base; ++x) beads.push_back(x);
      for (Int x : beads) {
        Int y = x + L;
        if (!B.contains(r, y) && alpha_interval(lam.e(), imod(x + 1, lam.e()), L) == beta)
          wits.push_back({x, y, r});
      }
    }
  }
  return build_all(lam, B, std::move(wits), false);
}

StandardTableau::StandardTableau(SkewDiagram shape, std::vector<Node> order)
    : shape_(std::move(shape)), order_(std::move(order)) {
  require((Int)order_.size() == shape_.size(), "filling must cover the diagram exactly");
  std::vector<Node> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  require(sorted == shape_.nodes(), "filling must enumerate the diagram's nodes once each");
  for (size_t i = 0; i < order_.size(); ++i)
    for (size_t j = i + 1; j < order_.size(); ++j)
      require(!southeast(order_[j], order_[i]), "entries must grow to the southeast");
}

StandardTableau leading_tableau(const SkewDiagram& tau) {
  return StandardTableau(tau, tau.nodes());
}

Word tableau_word(Int e, const StandardTableau& t) {
  std::vector<Int> letters;
  letters.reserve(t.order().size());
  for (const Node& u : t.order()) letters.push_back(residue(e, u));
  return Word(e, std::move(letters));
}

std::optional<StandardTableau> is_word_in(Int e, const SkewDiagram& tau, const Word& w) {
  require(w.e == e, "the word must carry the same e");
  require((Int)w.letters.size() == tau.size(), "word length must match the diagram size");

  // Each row fills strictly left to right, so a search state is the vector
  // of per-row fill counts; failed states are memoized.
  struct RowRec {
    Int comp, row, lo, hi;
  };
  std::vector<RowRec> rows;
  for (const Node& u : tau.nodes()) {
    if (!rows.empty() && rows.back().comp == u.comp && rows.back().row == u.row)
      rows.back().hi = u.col;
    else
      rows.push_back({u.comp, u.row, u.col, u.col});
  }
  std::map<std::pair<Int, Int>, Int> row_index;
  for (size_t j = 0; j < rows.size(); ++j) row_index[{rows[j].comp, rows[j].row}] = (Int)j;

  Int n = tau.size();
  std::vector<Int> fill(rows.size(), 0);
  std::vector<Node> order;
  order.reserve(n);
  std::set<std::vector<Int>> dead;

  std::function<bool(Int)> go = [&](Int k) -> bool {
    if (k == n) return true;
    if (dead.count(fill)) return false;
    for (size_t j = 0; j < rows.size(); ++j) {
      const RowRec& rr = rows[j];
      if (fill[j] > rr.hi - rr.lo) continue;  // row already full
      Node u{rr.row, rr.lo + fill[j], rr.comp};
      if (residue(e, u) != w.letters[k]) continue;
      auto it = row_index.find({rr.comp, rr.row - 1});
      if (it != row_index.end()) {
        const RowRec& up = rows[it->second];
        if (u.col >= up.lo && u.col <= up.hi && fill[it->second] <= u.col - up.lo)
          continue;  // the node to the north is still empty
      }
      ++fill[j];
      order.push_back(u);
      if (go(k + 1)) return true;
      order.pop_back();
      --fill[j];
    }
    dead.insert(fill);
    return false;
  };

  if (!go(0)) return std::nullopt;
  return StandardTableau(tau, order);
}

std::vector<SkewDiagram> distill(Int e, const SkewDiagram& tau) {
  require(e >= 2, "e must be at least 2");
  std::set<Node> left(tau.nodes().begin(), tau.nodes().end());
  struct Piece {
    std::vector<Node> nodes;
    Int comp = 1, minrow = 0, maxrow = 0, mincol = 0, maxcol = 0;
  };
  std::vector<Piece> pieces;
  while (!left.empty()) {
    Node seed = *left.begin();
    left.erase(left.begin());
    Piece p;
    p.comp = seed.comp;
    p.minrow = p.maxrow = seed.row;
    p.mincol = p.maxcol = seed.col;
    std::vector<Node> stack{seed};
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      p.nodes.push_back(u);
      p.minrow = std::min(p.minrow, u.row);
      p.maxrow = std::max(p.maxrow, u.row);
      p.mincol = std::min(p.mincol, u.col);
      p.maxcol = std::max(p.maxcol, u.col);
      for (Node v : {north(u), south(u), east(u), west(u)}) {
        auto it = left.find(v);
        if (it != left.end()) {
          left.erase(it);
          stack.push_back(v);
        }
      }
    }
    pieces.push_back(std::move(p));
  }

  // A piece is strictly northeast of another when every node of the first is
  // strictly north and strictly east of every node of the second.
  auto ne_of = [](const Piece& a, const Piece& b) {
    return a.maxrow < b.minrow && a.mincol > b.maxcol;
  };
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = i + 1; j < pieces.size(); ++j)
      if (pieces[i].comp == pieces[j].comp)
        require(ne_of(pieces[i], pieces[j]) || ne_of(pieces[j], pieces[i]),
                "pieces are not totally ordered to the northeast");
  std::sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return ne_of(a, b);
  });

  std::vector<SkewDiagram> out;
  out.reserve(pieces.size());
  for (const Piece& p : pieces) {
    Int s = 1 - p.minrow;
    Int c0 = p.mincol + s;
    Int shift = imod(c0 - 1, e) + 1 - c0;  // multiple of e, keeps residues
    std::vector<Node> moved;
    moved.reserve(p.nodes.size());
    for (const Node& u : p.nodes) moved.push_back({u.row + s, u.col + s + shift, 1});
    out.push_back(SkewDiagram(std::move(moved)));
  }
  return out;
}

bool similar(Int e, const SkewDiagram& a, const SkewDiagram& b) {
  return distill(e, a) == distill(e, b);
}

void FockVector::add(const Multipartition& lam, Int coeff) {
  if (coeff == 0) return;
  if (!terms_.empty()) {
    const Multipartition& ref = terms_.begin()->first;
    require(ref.e() == lam.e() && ref.charges() == lam.charges(),
            "all terms of a Fock vector share one charge frame");
  }
  auto [it, inserted] = terms_.try_emplace(lam, 0);
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Int FockVector::coeff(const Multipartition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? 0 : it->second;
}

FockVector fock_apply(FockOp op, const RootVector& beta, const FockVector& v) {
  RootClass rc = classify(beta);
  require(rc.kind == RootKind::real_root, "the Fock operators act for real root vectors only");
  FockVector out;
  for (const auto& [lam, c] : v.terms()) {
    require(lam.e() == beta.e, "terms must share the root vector's e");
    auto moves = op == FockOp::lower ? addable_ribbons_of_content(lam, beta)
                                     : removable_ribbons_of_content(lam, beta);
    for (const RibbonMove& m : moves) {
      Int sign = column_count(m.ribbon) % 2 == 1 ? 1 : -1;
      out.add(m.result, c * sign);
    }
  }
  return out;
}

FockVector fock_apply(FockOp op, const RootVector& beta, const Multipartition& lam) {
  FockVector v;
  v.add(lam, 1);
  return fock_apply(op, beta, v);
}

}  // namespace klr
