#include "klr/shapes.hpp"

#include <algorithm>

namespace klr {

EellMultipartition::EellMultipartition(Int e, Int ell, PartitionTuple comps)
    : e_(e), ell_(ell), comps_(std::move(comps)) {
  require(e_ >= 2, "e must be at least 2");
  require(ell_ >= 1, "the level must be positive");
  require((Int)comps_.size() == e_ * ell_, "component count must be e times the level");
  for (const auto& p : comps_) require_partition(p);
}

Int EellMultipartition::total() const { return size_of(comps_); }

const Partition& EellMultipartition::at(Int t, Int r) const {
  require(t >= 0 && t < e_ && r >= 1 && r <= ell_, "component index out of range");
  return comps_[(size_t)((r - 1) * e_ + t)];
}

bool operator<(const EellMultipartition& a, const EellMultipartition& b) {
  if (a.e_ != b.e_) return a.e_ < b.e_;
  if (a.ell_ != b.ell_) return a.ell_ < b.ell_;
  return a.comps_ < b.comps_;
}

SkewDiagram zeta_ribbon(const RootVector& beta, Node u, const ConvexPreorder& order) {
  Int e = order.e();
  require(beta.e == e, "the root and the preorder disagree on e");
  require(is_indivisible_root(beta), "the walk needs a real root or delta");
  RootClass cls = classify(beta);
  Int a = 0, length = 0;
  if (cls.kind == RootKind::real_root) {
    a = cls.t;
    length = cls.L;
    require(residue(e, u) == a, "the walk must start at the first residue of the root");
  } else {
    a = residue(e, u);
    length = e;
  }
  std::vector<Node> nodes{u};
  Node cur = u;
  for (Int i = 1; i < length; ++i) {
    Rel rel = order.compare(alpha_interval(e, a, i), beta);
    internal_check(rel != Rel::equivalent, "the walk compared equivalent roots");
    cur = rel == Rel::above ? north(cur) : east(cur);
    nodes.push_back(cur);
  }
  return SkewDiagram(nodes);
}

SkewDiagram zeta_delta(Int i, const ConvexPreorder& order) {
  Int e = order.e();
  require(i >= 0 && i < e, "the row index must be a residue");
  ResiduePermutation theta = realized_permutation(order);
  Int a = imod(theta.at(e - i) + 1, e);
  SkewDiagram out = zeta_ribbon(RootVector::delta(e), Node{0, a, 1}, order);
  internal_check(row_count(out) == i + 1, "the delta walk produced the wrong row count");
  return out;
}

SkewDiagram theta_ribbon(const ResiduePermutation& theta, Int a) {
  Int e = theta.e;
  require(a >= 0 && a < e, "the row index must be a residue");
  // The residues placed at position e-a or later, read downward from
  // theta_{e-a}; row j of the template runs from phi^{j+1}+1 up to phi^j.
  std::vector<Int> phi;
  for (Int k = 0; k < e; ++k) {
    Int res = imod(theta.at(e - a) - k, e);
    if (theta.position(res) >= e - a) phi.push_back(res);
  }
  internal_check((Int)phi.size() == a + 1, "the residue subsequence has the wrong length");
  std::vector<Int> len(a + 1), lcol(a + 1), rcol(a + 1);
  for (Int j = 0; j <= a; ++j) {
    len[j] = imod(phi[j] - phi[(j + 1) % (a + 1)], e);
    if (len[j] == 0) len[j] = e;
  }
  lcol[a] = 1;
  rcol[a] = len[a];
  for (Int j = a - 1; j >= 0; --j) {
    lcol[j] = rcol[j + 1];
    rcol[j] = lcol[j] + len[j] - 1;
  }
  Int shift = imod(phi[0] + 1 - (1 - (a + 1)), e);
  std::vector<Node> nodes;
  for (Int j = 0; j <= a; ++j)
    for (Int c = lcol[j]; c <= rcol[j]; ++c) nodes.push_back({j + 1, c + shift, 1});
  SkewDiagram out = distill(e, SkewDiagram(nodes)).front();
  internal_check(content(e, out) == RootVector::delta(e) && is_ribbon(out) &&
                     row_count(out) == a + 1,
                 "the template is not a delta ribbon with a+1 rows");
  return out;
}

SkewDiagram dilate(Int i, const Partition& nu, const ConvexPreorder& order) {
  Int e = order.e();
  require(i >= 0 && i < e, "the dilation index must be a residue");
  require_partition(nu);
  SkewDiagram base = zeta_delta(i, order);
  std::vector<Node> nodes;
  for (Int x = 1; x <= (Int)nu.size(); ++x)
    for (Int y = 1; y <= nu[(size_t)(x - 1)]; ++y) {
      Int drow = (x - 1) * (i + 1) - (y - 1) * i;
      Int dcol = (y - 1) * (e - i) - (x - 1) * (e - i - 1);
      for (const Node& v : base.nodes()) nodes.push_back({v.row + drow, v.col + dcol, 1});
    }
  SkewDiagram out(nodes);
  internal_check(out.size() == e * size_of(nu), "dilation copies overlapped");
  return out;
}

std::vector<SkewDiagram> zeta_nu(const PartitionTuple& nu, const ConvexPreorder& order) {
  require((Int)nu.size() == order.e() - 1, "the tuple must have e-1 components");
  std::vector<SkewDiagram> out;
  for (Int t = 1; t < order.e(); ++t) out.push_back(dilate(t, nu[(size_t)(t - 1)], order));
  return out;
}

std::vector<SkewDiagram> zeta_pi(const RootPartition& pi, const ConvexPreorder& order) {
  Int e = order.e();
  require(pi.kostant.e == e, "the root partition and the preorder disagree on e");
  std::vector<SkewDiagram> out;
  bool placed = false;
  auto place = [&] {
    for (SkewDiagram& piece : zeta_nu(pi.nu, order)) out.push_back(std::move(piece));
    placed = true;
  };
  for (const auto& [beta, mult] : pi.kostant.entries) {
    if (beta == RootVector::delta(e)) {
      place();
      continue;
    }
    if (!placed && !is_above_delta(order, beta)) place();
    for (Int k = 0; k < mult; ++k)
      out.push_back(zeta_ribbon(beta, Node{0, classify(beta).t, 1}, order));
  }
  if (!placed) place();
  return out;
}

Multipartition apply_bead_moves(const EellMultipartition& nu, const Multipartition& rho,
                                const ResiduePermutation& theta) {
  Int e = rho.e();
  require(nu.e() == e && theta.e == e, "the data disagree on e");
  require(nu.ell() == rho.level(), "the tuple and the base have different levels");
  require(is_rock_multicore(rho, theta), "the base multipartition is not a RoCK multicore");
  Int d = nu.total();
  require(d <= capacity(rho, theta).cap, "the bead moves exceed the capacity");
  BetaSet B = beta_numbers(rho);
  std::vector<std::pair<Int, std::vector<Int>>> comps;
  for (Int r = 1; r <= rho.level(); ++r) {
    Int floor = B.lowest_gap(r) - (d + 2) * e;
    std::vector<Int> members;
    for (Int i = 0; i < e; ++i) {
      std::vector<Int> vals;
      for (Int q = 1;; ++q) {
        Int v = B.runner_value(r, i, q);
        if (v < floor) break;
        vals.push_back(v);
      }
      const Partition& parts = nu.at(e - theta.position(i), r);
      internal_check(parts.size() <= vals.size(), "a runner ran out of window beads");
      for (size_t q = 0; q < parts.size(); ++q) vals[q] += e * parts[q];
      members.insert(members.end(), vals.begin(), vals.end());
    }
    comps.push_back({floor, members});
  }
  return BetaSet::from_members(e, rho.charges(), comps).to_multipartition();
}

SkewDiagram nu_theta_rho(const EellMultipartition& nu, const Multipartition& rho,
                         const ResiduePermutation& theta) {
  return skew_of(apply_bead_moves(nu, rho, theta), rho);
}

SkewDiagram node_ribbon(Int t, Int r, Int x, Int y, const Multipartition& rho,
                        const ResiduePermutation& theta) {
  Int e = rho.e();
  require(t >= 0 && t < e, "the residue index is out of range");
  require(r >= 1 && r <= rho.level(), "the component index is out of range");
  require(x >= 1 && y >= 1, "node coordinates are 1-based");
  PartitionTuple full((size_t)(e * rho.level())), cut((size_t)(e * rho.level()));
  size_t slot = (size_t)((r - 1) * e + t);
  full[slot] = Partition((size_t)x, y);
  cut[slot] = Partition((size_t)(x - 1), y);
  if (y > 1) cut[slot].push_back(y - 1);
  Multipartition outer = apply_bead_moves({e, rho.level(), full}, rho, theta);
  Multipartition inner = apply_bead_moves({e, rho.level(), cut}, rho, theta);
  return skew_of(outer, inner);
}

Word gg_segment(const ResiduePermutation& theta, Int a) {
  return tableau_word(theta.e, leading_tableau(theta_ribbon(theta, a)));
}

Word word_power(const Word& w, Int n) {
  require(n >= 0, "the repeat count must be nonnegative");
  std::vector<Int> letters;
  for (Int x : w.letters)
    for (Int k = 0; k < n; ++k) letters.push_back(x);
  return Word(w.e, letters);
}

Word word_partition(const Word& w, const Partition& lam) {
  require_partition(lam);
  Word out(w.e, {});
  for (Int part : lam) out = concat(out, word_power(w, part));
  return out;
}

GGWord gg_word(const ResiduePermutation& theta, const EellMultipartition& nu) {
  Int e = theta.e;
  require(nu.e() == e, "the tuple and the permutation disagree on e");
  Word out(e, {});
  for (Int r = 1; r <= nu.ell(); ++r)
    for (Int t = 0; t < e; ++t)
      out = concat(out, word_partition(gg_segment(theta, t), nu.at(t, r)));
  internal_check((Int)out.letters.size() == e * nu.total() &&
                     out.content() == nu.total() * RootVector::delta(e),
                 "the word misses its length or content");
  return {out, theta, nu};
}

GGWord gg_word(const ResiduePermutation& theta, const PartitionTuple& nu) {
  return gg_word(theta, hat(nu));
}

std::pair<Int, Multipartition> build_rock_core(const ResiduePermutation& theta, Int d) {
  require(d >= 0, "the depth must be nonnegative");
  Int e = theta.e;
  std::vector<Int> maxima((size_t)e);
  for (Int a = 1; a <= e; ++a)
    maxima[(size_t)theta.at(a)] = theta.at(a) - e + e * d * (a - 1);
  // The charge is pinned by the bead count over any base below every runner
  // maximum; slide the whole set by multiples of e to land it in [0, e).
  Int base = *std::min_element(maxima.begin(), maxima.end()) - e;
  Int charge = base;
  for (Int i = 0; i < e; ++i) charge += fdiv(maxima[(size_t)i] - base, e) + 1;
  Int slide = fdiv(charge, e);
  for (Int i = 0; i < e; ++i) maxima[(size_t)i] -= e * slide;
  charge -= e * slide;
  Multipartition rho = BetaSet::from_runner_maxima(e, {charge}, {maxima}).to_multipartition();
  internal_check(is_rock_multicore(rho, theta) && capacity(rho, theta).cap >= d,
                 "the staircase failed to reach its capacity");
  return {charge, rho};
}

bool is_e_restricted(Int e, const Partition& lam) {
  require(e >= 2, "e must be at least 2");
  require_partition(lam);
  for (size_t i = 0; i < lam.size(); ++i) {
    Int next = i + 1 < lam.size() ? lam[i + 1] : 0;
    if (lam[i] - next >= e) return false;
  }
  return true;
}

EellMultipartition hat(const PartitionTuple& nu) {
  require(!nu.empty(), "the tuple must have at least one component");
  PartitionTuple comps{Partition{}};
  comps.insert(comps.end(), nu.begin(), nu.end());
  return {(Int)nu.size() + 1, 1, comps};
}

Int count_multipartitions(Int c, Int d) {
  require(c >= 0 && d >= 0, "the counts must be nonnegative");
  std::vector<Int> p((size_t)d + 1, 0);
  p[0] = 1;
  for (Int k = 1; k <= d; ++k)
    for (Int n = k; n <= d; ++n) p[(size_t)n] += p[(size_t)(n - k)];
  std::vector<Int> out((size_t)d + 1, 0);
  out[0] = 1;
  for (Int j = 0; j < c; ++j) {
    std::vector<Int> next((size_t)d + 1, 0);
    for (Int a = 0; a <= d; ++a)
      for (Int b = 0; a + b <= d; ++b) next[(size_t)(a + b)] += out[(size_t)a] * p[(size_t)b];
    out = next;
  }
  return out[(size_t)d];
}

}  // namespace klr
