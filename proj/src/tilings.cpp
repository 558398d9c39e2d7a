#include "klr/tilings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "klr/shapes.hpp"

namespace klr {

namespace {

// Bottom row, then leftmost. For a ribbon this is the node the preorder walk
// starts from.
Node sw_node(const SkewDiagram& xi) {
  Node best = xi.nodes().front();
  for (const Node& u : xi.nodes())
    if (u.row > best.row || (u.row == best.row && u.col < best.col)) best = u;
  return best;
}

// Deterministic walk from a start with nothing below it. An east neighbor in
// tau forces an east step (abandoned if the target has a node hanging below,
// since a ribbon through it would break closure); otherwise the current path
// is a complete SE-closed ribbon, and a north neighbor in tau lets the walk
// continue.
void walk_se(const SkewDiagram& tau, Node start, std::vector<SkewDiagram>& out) {
  std::vector<Node> path{start};
  Node v = start;
  for (;;) {
    Node to_e = east(v);
    if (tau.contains(to_e)) {
      if (tau.contains(south(to_e))) return;
      path.push_back(to_e);
      v = to_e;
      continue;
    }
    out.push_back(SkewDiagram(path));
    Node to_n = north(v);
    if (!tau.contains(to_n)) return;
    path.push_back(to_n);
    v = to_n;
  }
}

// Mirror walk for NW-closed ribbons: north steps are forced, east steps
// optional, and a path may end only when nothing sits above its head.
void walk_nw(const SkewDiagram& tau, Node start, std::vector<SkewDiagram>& out) {
  std::vector<Node> path{start};
  Node v = start;
  for (;;) {
    Node to_n = north(v);
    if (tau.contains(to_n)) {
      if (tau.contains(west(to_n))) return;
      path.push_back(to_n);
      v = to_n;
      continue;
    }
    out.push_back(SkewDiagram(path));
    Node to_e = east(v);
    if (!tau.contains(to_e)) return;
    path.push_back(to_e);
    v = to_e;
  }
}

// Visit every nonempty subset of tau closed under south and east steps.
// Nodes are decided in reverse row-reading order so that a node's south and
// east neighbors are settled before the node itself; the callback returns
// false to abort the enumeration.
template <typename F>
void foreach_se_closed(const SkewDiagram& tau, F&& visit) {
  const std::vector<Node>& nodes = tau.nodes();
  Int n = (Int)nodes.size();
  std::map<Node, Int> index;
  for (Int i = 0; i < n; ++i) index[nodes[(size_t)i]] = i;
  auto idx_of = [&](const Node& u) -> Int {
    auto it = index.find(u);
    return it == index.end() ? -1 : it->second;
  };
  std::vector<char> in((size_t)n, 0);
  std::vector<Node> chosen;
  bool go = true;
  std::function<void(Int)> rec = [&](Int pos) {
    if (!go) return;
    if (pos < 0) {
      if (!chosen.empty()) go = visit(chosen);
      return;
    }
    const Node& u = nodes[(size_t)pos];
    rec(pos - 1);
    if (!go) return;
    Int s = idx_of(south(u)), t = idx_of(east(u));
    if ((s < 0 || in[(size_t)s]) && (t < 0 || in[(size_t)t])) {
      in[(size_t)pos] = 1;
      chosen.push_back(u);
      rec(pos - 1);
      chosen.pop_back();
      in[(size_t)pos] = 0;
    }
  };
  rec(n - 1);
}

RootVector content_of(Int e, const std::vector<Node>& nodes) {
  std::vector<Int> counts((size_t)e, 0);
  for (const Node& u : nodes) ++counts[(size_t)residue(e, u)];
  return RootVector(e, counts);
}

// Split a content vector as multiplicity times an indivisible root, if it has
// that shape. Indivisible roots have coprime coefficients, so the multiplier
// is the gcd.
std::optional<std::pair<RootVector, Int>> indivisible_base(const RootVector& c) {
  Int g = 0;
  for (Int x : c.coeffs) g = std::gcd(g, x);
  if (g == 0) return std::nullopt;
  std::vector<Int> reduced;
  reduced.reserve(c.coeffs.size());
  for (Int x : c.coeffs) reduced.push_back(x / g);
  RootVector base(c.e, reduced);
  if (!is_indivisible_root(base)) return std::nullopt;
  return std::make_pair(base, g);
}

// Edge-connected components, kept at their original positions.
std::vector<SkewDiagram> connected_pieces(const SkewDiagram& tau) {
  std::set<Node> left(tau.nodes().begin(), tau.nodes().end());
  std::vector<SkewDiagram> out;
  while (!left.empty()) {
    std::vector<Node> comp, stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Node v : {north(u), south(u), east(u), west(u)}) {
        auto it = left.find(v);
        if (it != left.end()) {
          left.erase(it);
          stack.push_back(v);
        }
      }
    }
    out.push_back(SkewDiagram(std::move(comp)));
  }
  return out;
}

RibbonTiling merge_content_runs(const RibbonTiling& gamma) {
  std::vector<SkewDiagram> merged;
  Int n = gamma.size();
  Int i = 0;
  while (i < n) {
    std::vector<Node> nodes;
    Int j = i;
    while (j < n && gamma.contents()[(size_t)j] == gamma.contents()[(size_t)i]) {
      const std::vector<Node>& part = gamma.tiles()[(size_t)j].nodes();
      nodes.insert(nodes.end(), part.begin(), part.end());
      ++j;
    }
    merged.push_back(SkewDiagram(std::move(nodes)));
    i = j;
  }
  return RibbonTiling(gamma.e(), std::move(merged));
}

// Undo a dilation: the southwest anchors of the constituent ribbons sit on a
// rank-two lattice indexed by the cells of the dilated partition, and the
// index map inverts over the integers exactly when the piece really is a
// dilation image.
Partition undo_dilation(const SkewDiagram& piece, const std::vector<SkewDiagram>& ribs,
                        Int a, const ConvexPreorder& order) {
  Int e = order.e();
  std::vector<Node> anchors;
  anchors.reserve(ribs.size());
  for (const SkewDiagram& r : ribs) anchors.push_back(sw_node(r));
  std::vector<std::pair<Int, Int>> cells;
  Int minx = 0, miny = 0;
  for (size_t k = 0; k < anchors.size(); ++k) {
    Int dr = anchors[k].row - anchors[0].row;
    Int dc = anchors[k].col - anchors[0].col;
    Int xn = dr * (e - a) + dc * a;
    Int yn = dr * (e - a - 1) + dc * (a + 1);
    internal_check(xn % e == 0 && yn % e == 0,
                   "ribbon anchors do not lie on the dilation lattice");
    Int x = xn / e, y = yn / e;
    if (k == 0 || x < minx) minx = x;
    if (k == 0 || y < miny) miny = y;
    cells.emplace_back(x, y);
  }
  std::set<std::pair<Int, Int>> cellset;
  Int maxx = 0;
  for (auto& [x, y] : cells) {
    x += 1 - minx;
    y += 1 - miny;
    cellset.emplace(x, y);
    maxx = std::max(maxx, x);
  }
  internal_check((Int)cellset.size() == (Int)cells.size(),
                 "two ribbons share one dilation cell");
  for (const auto& [x, y] : cellset) {
    internal_check(x == 1 || cellset.count({x - 1, y}) == 1,
                   "dilation cells do not form a partition shape");
    internal_check(y == 1 || cellset.count({x, y - 1}) == 1,
                   "dilation cells do not form a partition shape");
  }
  Partition nu((size_t)maxx, 0);
  for (const auto& [x, y] : cellset) ++nu[(size_t)(x - 1)];
  internal_check(similar(e, piece, dilate(a, nu, order)),
                 "recovered partition does not dilate back to the piece");
  return nu;
}

}  // namespace

RibbonTiling::RibbonTiling(Int e, std::vector<SkewDiagram> tiles)
    : e_(e), tiles_(std::move(tiles)) {
  require(e_ >= 2, "e must be at least 2");
  std::vector<Node> all;
  Int total = 0;
  contents_.reserve(tiles_.size());
  for (const SkewDiagram& t : tiles_) {
    require(!t.empty(), "tiles must be nonempty");
    contents_.push_back(content(e_, t));
    all.insert(all.end(), t.nodes().begin(), t.nodes().end());
    total += t.size();
  }
  union_ = SkewDiagram(std::move(all));
  require(union_.size() == total, "tiles must be pairwise disjoint");
}

bool operator==(const RibbonTiling& a, const RibbonTiling& b) {
  return a.e_ == b.e_ && a.tiles_ == b.tiles_;
}

std::vector<SkewDiagram> se_closed_subsets(const SkewDiagram& tau) {
  std::vector<SkewDiagram> out;
  foreach_se_closed(tau, [&](const std::vector<Node>& s) {
    out.push_back(SkewDiagram(s));
    return true;
  });
  return out;
}

std::vector<SkewDiagram> se_removable_ribbons(const SkewDiagram& tau) {
  std::vector<SkewDiagram> out;
  for (const Node& u : tau.nodes())
    if (!tau.contains(south(u))) walk_se(tau, u, out);
  return out;
}

std::vector<SkewDiagram> nw_removable_ribbons(const SkewDiagram& tau) {
  std::vector<SkewDiagram> out;
  for (const Node& u : tau.nodes())
    if (!tau.contains(west(u))) walk_nw(tau, u, out);
  return out;
}

bool is_cuspidal_ribbon(const SkewDiagram& xi, const ConvexPreorder& order) {
  Int e = order.e();
  require(is_ribbon(xi), "cuspidality is only defined for ribbons");
  RootVector beta = content(e, xi);
  require(is_indivisible_root(beta),
          "the ribbon content must be an indivisible positive root");
  Node u = sw_node(xi);
  RootClass rc = classify(beta);
  if (rc.kind == RootKind::real_root && residue(e, u) != rc.t) return false;
  return xi == zeta_ribbon(beta, u, order);
}

bool is_semicuspidal_diagram(const SkewDiagram& tau, const ConvexPreorder& order) {
  Int e = order.e();
  require(!tau.empty(), "semicuspidality needs a nonempty diagram");
  RootVector omega = content(e, tau);
  std::optional<std::pair<RootVector, Int>> split = indivisible_base(omega);
  if (!split) return false;
  const RootVector& base = split->first;

  std::map<std::vector<Int>, bool> below_memo, above_memo;
  auto decomposes = [&](const RootVector& c, Side side,
                        std::map<std::vector<Int>, bool>& memo) {
    auto it = memo.find(c.coeffs);
    if (it != memo.end()) return it->second;
    bool ok = decompose_into_roots(order, c, side, base).has_value();
    memo.emplace(c.coeffs, ok);
    return ok;
  };

  bool all_ok = true;
  foreach_se_closed(tau, [&](const std::vector<Node>& s) {
    if ((Int)s.size() == tau.size()) return true;
    RootVector c2 = content_of(e, s);
    RootVector c1 = *subtract(omega, c2);
    if (!decomposes(c1, Side::weakly_below, below_memo) ||
        !decomposes(c2, Side::weakly_above, above_memo)) {
      all_ok = false;
      return false;
    }
    return true;
  });
  return all_ok;
}

RibbonTiling cuspidal_kostant_tiling(const SkewDiagram& tau, const ConvexPreorder& order,
                                     GreedyDirection direction) {
  Int e = order.e();
  bool se = direction == GreedyDirection::southeast_min;
  std::vector<SkewDiagram> removed;
  SkewDiagram cur = tau;
  while (!cur.empty()) {
    std::vector<SkewDiagram> cands =
        se ? se_removable_ribbons(cur) : nw_removable_ribbons(cur);
    std::vector<std::pair<SkewDiagram, RootVector>> pool;
    for (SkewDiagram& c : cands) {
      Int sz = c.size();
      if (sz % e == 0 && sz != e) continue;  // a proper delta multiple
      RootVector rc = content(e, c);
      pool.emplace_back(std::move(c), std::move(rc));
    }
    internal_check(!pool.empty(), "no removable ribbon with indivisible content");

    Int best = 0;
    for (Int i = 1; i < (Int)pool.size(); ++i) {
      Rel rel = order.compare(pool[(size_t)i].second, pool[(size_t)best].second);
      if (se ? rel == Rel::below : rel == Rel::above) best = i;
    }
    std::vector<Int> klass;
    for (Int i = 0; i < (Int)pool.size(); ++i)
      if (order.compare(pool[(size_t)i].second, pool[(size_t)best].second) ==
          Rel::equivalent)
        klass.push_back(i);
    const RootVector& bc = pool[(size_t)best].second;
    for (Int i : klass)
      internal_check(pool[(size_t)i].second == bc,
                     "extremal candidates mix distinct contents");
    for (size_t i = 0; i < klass.size(); ++i)
      for (size_t j = i + 1; j < klass.size(); ++j) {
        const SkewDiagram& p = pool[(size_t)klass[i]].first;
        const SkewDiagram& q = pool[(size_t)klass[j]].first;
        bool overlap = false;
        for (const Node& u : p.nodes())
          if (q.contains(u)) {
            overlap = true;
            break;
          }
        internal_check(!overlap, "extremal candidates of one content overlap");
      }
    Int pick = klass.front();
    for (Int i : klass)
      if (pool[(size_t)i].first < pool[(size_t)pick].first) pick = i;

    const SkewDiagram& tile = pool[(size_t)pick].first;
    internal_check(is_cuspidal_ribbon(tile, order), "greedy tile is not cuspidal");
    std::vector<Node> rest;
    rest.reserve((size_t)(cur.size() - tile.size()));
    for (const Node& u : cur.nodes())
      if (!tile.contains(u)) rest.push_back(u);
    removed.push_back(tile);
    cur = SkewDiagram(std::move(rest));
  }
  if (se) std::reverse(removed.begin(), removed.end());
  RibbonTiling out(e, std::move(removed));
  const std::vector<RootVector>& cs = out.contents();
  for (size_t i = 0; i + 1 < cs.size(); ++i)
    internal_check(order.compare(cs[i], cs[i + 1]) != Rel::below,
                   "tile contents fail to decrease along the tableau order");
  return out;
}

RibbonTiling strict_kostant_tiling(const SkewDiagram& tau, const ConvexPreorder& order) {
  RibbonTiling merged = merge_content_runs(cuspidal_kostant_tiling(tau, order));
  const std::vector<RootVector>& cs = merged.contents();
  for (size_t i = 0; i + 1 < cs.size(); ++i) {
    std::optional<std::pair<RootVector, Int>> a = indivisible_base(cs[i]);
    std::optional<std::pair<RootVector, Int>> b = indivisible_base(cs[i + 1]);
    internal_check(a && b, "merged tile content is not a root multiple");
    internal_check(order.compare(a->first, b->first) == Rel::above,
                   "merged contents fail to decrease strictly");
  }
  return merged;
}

TilingClassReport block_tiling_class(const RootVector& omega,
                                     const std::vector<Int>& charges,
                                     const ConvexPreorder& order, Int budget) {
  Int e = order.e();
  require(omega.e == e, "the content and the preorder disagree on e");
  Block b = is_core_block(omega, charges) ? enumerate_core_block(omega, charges)
                                          : enumerate_block(omega, charges, budget);
  RootVector d = RootVector::delta(e);
  TilingClassReport rep;
  for (const Multipartition& lam : b.members()) {
    RibbonTiling g = cuspidal_kostant_tiling(lam.diagram(), order);
    bool weak = true, strict = true;
    for (const RootVector& c : g.contents()) {
      if (!side_holds(order, c, Side::weakly_above, d)) weak = false;
      if (!side_holds(order, c, Side::strictly_above, d)) strict = false;
    }
    rep.members.push_back(lam);
    rep.weakly_above.push_back(weak);
    rep.strictly_above.push_back(strict);
    rep.all_weakly_above = rep.all_weakly_above && weak;
    rep.all_strictly_above = rep.all_strictly_above && strict;
  }
  return rep;
}

std::optional<Int> theta_a_ribbon_test(const SkewDiagram& xi,
                                       const ResiduePermutation& theta) {
  Int e = theta.e;
  require(is_ribbon(xi), "only ribbons can match a row template");
  require(content(e, xi) == RootVector::delta(e), "the ribbon content must be delta");
  for (Int a = 0; a < e; ++a)
    if (similar(e, xi, theta_ribbon(theta, a))) return a;
  return std::nullopt;
}

RootPartition root_partition_from_restricted(const Multipartition& lam,
                                             const ConvexPreorder& order) {
  Int e = order.e();
  require(lam.e() == e, "the partition and the preorder disagree on e");
  require(lam.level() == 1, "only level-one partitions carry a root partition");
  require(is_e_restricted(e, lam.parts().front()), "the partition must be e-restricted");
  ResiduePermutation theta = realized_permutation(order);

  RibbonTiling gamma = cuspidal_kostant_tiling(lam.diagram(), order);
  RibbonTiling strict = merge_content_runs(gamma);
  RootVector d = RootVector::delta(e);

  std::vector<std::pair<RootVector, Int>> raw;
  PartitionTuple nu((size_t)(e - 1));
  std::vector<char> used((size_t)e, 0);
  for (Int i = 0; i < strict.size(); ++i) {
    std::optional<std::pair<RootVector, Int>> split =
        indivisible_base(strict.contents()[(size_t)i]);
    internal_check(split.has_value(), "merged tile content is not a root multiple");
    raw.emplace_back(split->first, split->second);
    if (classify(split->first).kind != RootKind::imaginary) continue;

    for (const SkewDiagram& piece : connected_pieces(strict.tiles()[(size_t)i])) {
      std::vector<SkewDiagram> ribs;
      for (Int j = 0; j < gamma.size(); ++j)
        if (gamma.contents()[(size_t)j] == d &&
            piece.contains(gamma.tiles()[(size_t)j].nodes().front()))
          ribs.push_back(gamma.tiles()[(size_t)j]);
      internal_check(!ribs.empty(), "a piece of the imaginary tile has no ribbons");
      Int a = -1;
      for (const SkewDiagram& r : ribs) {
        std::optional<Int> got = theta_a_ribbon_test(r, theta);
        internal_check(got.has_value(), "ribbon matches no row template");
        if (a < 0) a = *got;
        internal_check(*got == a, "one piece mixes distinct row templates");
      }
      internal_check(a >= 1 && a <= e - 1,
                     "a restricted partition cannot use the row of e");
      internal_check(!used[(size_t)a], "two pieces claim the same dilation slot");
      used[(size_t)a] = 1;
      nu[(size_t)(a - 1)] = undo_dilation(piece, ribs, a, order);
    }
  }
  return RootPartition(KostantPartition(e, std::move(raw), order), std::move(nu));
}

}  // namespace klr
