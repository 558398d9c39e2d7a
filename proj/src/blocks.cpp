#include "klr/blocks.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <utility>

namespace klr {

Block::Block(Int e, std::vector<Int> charges, RootVector content,
             std::vector<Multipartition> members)
    : e_(e), charges_(std::move(charges)), content_(std::move(content)),
      members_(std::move(members)) {
  require(e_ >= 2, "e must be at least 2");
  require(!charges_.empty(), "at least one charge component is needed");
  require(content_.e == e_, "content has the wrong modulus");
  for (const Multipartition& m : members_) {
    require(m.e() == e_ && m.charges() == charges_,
            "member disagrees with the block charge frame");
    require(m.content() == content_, "member content disagrees with the block");
  }
  std::sort(members_.begin(), members_.end());
  for (size_t i = 1; i < members_.size(); ++i)
    require(!(members_[i - 1] == members_[i]), "duplicate block member");
}

namespace {

Int tri(Int q) { return q >= 0 ? q * (q + 1) / 2 : 0; }

// Beta sets with solid runners are cut out by a deviation matrix: runner s of
// component r tops out at base[r][s] + e * dev[r][s], where base[r][s] is the
// largest value congruent to s below the reduced charge. Row sums vanish
// (the charge is fixed) and column sums equal the cyclic content differences.
struct DeviationFrame {
  Int e = 0, ell = 0;
  std::vector<Int> kb;                   // reduced charges
  std::vector<std::vector<Int>> base;    // baseline runner maxima of the empty set
  std::vector<Int> gamma;                // prescribed column sums

  DeviationFrame(const RootVector& omega, const std::vector<Int>& charges) {
    e = omega.e;
    ell = (Int)charges.size();
    kb.resize(ell);
    base.assign(ell, std::vector<Int>(e));
    for (Int r = 0; r < ell; ++r) {
      kb[r] = imod(charges[r], e);
      for (Int s = 0; s < e; ++s) base[r][s] = kb[r] - 1 - imod(kb[r] - 1 - s, e);
    }
    gamma.resize(e);
    for (Int s = 0; s < e; ++s) gamma[s] = omega.at(s) - omega.at(s + 1);
  }

  // Number of nodes of the multicore cut out by dev: each ordered runner pair
  // contributes a triangle of hooks. Exact, so candidates can be sized
  // before any reconstruction.
  Int size_of(const std::vector<std::vector<Int>>& dev) const {
    Int total = 0;
    for (Int r = 0; r < ell; ++r)
      for (Int s = 0; s < e; ++s)
        for (Int t = 0; t < e; ++t) {
          if (s == t) continue;
          total += tri(dev[r][s] - dev[r][t] + (base[r][s] > base[r][t] ? 0 : -1));
        }
    return total;
  }
};

}  // namespace

std::vector<Multipartition> multicores_of_content(const RootVector& omega,
                                                  const std::vector<Int>& charges) {
  Int e = omega.e;
  require(e >= 2, "e must be at least 2");
  require(!charges.empty(), "at least one charge component is needed");
  DeviationFrame fr(omega, charges);
  Int n = omega.height();

  // A deviation of absolute value u forces an opposite-signed partner in its
  // row, and that runner pair alone contributes u(u+1)/2 nodes. Anything
  // larger than the bound below therefore overshoots the content height.
  Int limit = 0;
  while ((limit + 1) * (limit + 2) / 2 <= n) ++limit;

  std::vector<std::vector<Int>> dev(fr.ell, std::vector<Int>(e, 0));
  std::vector<Int> colsum(e, 0);
  std::vector<Multipartition> out;

  auto close = [&]() {
    Int last = fr.ell - 1;
    Int rowsum = 0;
    for (Int s = 0; s < e; ++s) {
      Int v = fr.gamma[s] - colsum[s];
      if (v < -limit || v > limit) return;
      dev[last][s] = v;
      rowsum += v;
    }
    if (rowsum != 0) return;
    if (fr.size_of(dev) != n) return;
    std::vector<std::vector<Int>> maxima(fr.ell, std::vector<Int>(e));
    for (Int r = 0; r < fr.ell; ++r)
      for (Int s = 0; s < e; ++s) maxima[r][s] = fr.base[r][s] + e * dev[r][s];
    Multipartition cand =
        BetaSet::from_runner_maxima(e, charges, maxima).to_multipartition();
    if (cand.content() == omega) out.push_back(std::move(cand));
  };

  // Rows before the last are free up to their forced final entry; the last
  // row is pinned by the column sums.
  std::function<void(Int, Int, Int)> fill = [&](Int r, Int s, Int rowsum) {
    if (r == fr.ell - 1) {
      close();
      return;
    }
    if (s == e - 1) {
      Int v = -rowsum;
      if (v < -limit || v > limit) return;
      dev[r][s] = v;
      colsum[s] += v;
      fill(r + 1, 0, 0);
      colsum[s] -= v;
      return;
    }
    for (Int v = -limit; v <= limit; ++v) {
      Int partial = rowsum + v;
      if (partial > (e - 1 - s) * limit || partial < -(e - 1 - s) * limit) continue;
      dev[r][s] = v;
      colsum[s] += v;
      fill(r, s + 1, partial);
      colsum[s] -= v;
    }
  };
  fill(0, 0, 0);

  std::sort(out.begin(), out.end());
  return out;
}

bool block_has_members(const RootVector& omega, const std::vector<Int>& charges) {
  std::optional<RootVector> cur = omega;
  RootVector dlt = RootVector::delta(omega.e);
  while (cur) {
    if (!multicores_of_content(*cur, charges).empty()) return true;
    cur = subtract(*cur, dlt);
  }
  return false;
}

bool is_core_block(const RootVector& omega, const std::vector<Int>& charges) {
  if (multicores_of_content(omega, charges).empty()) return false;
  std::optional<RootVector> down = subtract(omega, RootVector::delta(omega.e));
  return !down || !block_has_members(*down, charges);
}

Block enumerate_block(const RootVector& omega, const std::vector<Int>& charges,
                      Int budget) {
  Int e = omega.e;
  require(e >= 2, "e must be at least 2");
  require(!charges.empty(), "at least one charge component is needed");
  if (budget <= 0) budget = 200000;
  Int states = 1;

  std::set<Multipartition> layer;
  layer.insert(Multipartition(e, charges, PartitionTuple(charges.size())));
  for (Int step = 0; step < omega.height() && !layer.empty(); ++step) {
    std::set<Multipartition> next;
    for (const Multipartition& lam : layer) {
      RootVector cur = lam.content();
      for (Int i = 0; i < e; ++i) {
        if (cur.at(i) >= omega.at(i)) continue;
        for (const RibbonMove& m :
             addable_ribbons_of_content(lam, RootVector::simple(e, i))) {
          if (next.insert(m.result).second && ++states > budget)
            throw budget_error("block enumeration exceeded its state budget");
        }
      }
    }
    layer = std::move(next);
  }
  return Block(e, charges, omega,
               std::vector<Multipartition>(layer.begin(), layer.end()));
}

Block enumerate_core_block(const RootVector& omega, const std::vector<Int>& charges) {
  require(is_core_block(omega, charges), "not a core block");
  std::vector<Multipartition> members = multicores_of_content(omega, charges);

  // Within a core block the members only ever disagree runner by runner
  // between two adjacent levels, one bead step apart.
  Int e = omega.e;
  std::vector<BetaSet> betas;
  betas.reserve(members.size());
  for (const Multipartition& m : members) betas.push_back(beta_numbers(m));
  for (Int r = 1; r <= (Int)charges.size(); ++r) {
    for (Int i = 0; i < e; ++i) {
      Int mn = std::numeric_limits<Int>::max();
      Int mx = std::numeric_limits<Int>::min();
      for (const BetaSet& B : betas) {
        Int v = B.runner_max(r, i);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
      internal_check(mx == mn || mx == mn + e,
                     "core block runner maxima spread past one step");
    }
  }
  return Block(e, charges, omega, std::move(members));
}

bool is_multicore(const Multipartition& rho) {
  BetaSet B = beta_numbers(rho);
  for (Int r = 1; r <= rho.level(); ++r)
    for (Int v : B.members_above(r))
      if (!B.contains(r, v - rho.e())) return false;
  return true;
}

namespace {

// Every member of component a, lowered by t, lies in component b. Only the
// finite stretch above b's solid region needs inspection.
bool shifted_subset(const BetaSet& B, Int a, Int b, Int t) {
  Int lo = B.lowest_gap(b) + t;
  for (Int x = lo; x < B.lowest_gap(a); ++x)
    if (!B.contains(b, x - t)) return false;
  for (Int v : B.members_above(a))
    if (v >= lo && !B.contains(b, v - t)) return false;
  return true;
}

}  // namespace

bool is_kappa_core(const Multipartition& rho) {
  Int e = rho.e();
  BetaSet B = beta_numbers(rho);
  for (Int r = 1; r <= rho.level(); ++r) {
    for (Int s = 1; s <= rho.level(); ++s) {
      if (imod(rho.charges()[r - 1], e) > imod(rho.charges()[s - 1], e)) continue;
      if (!shifted_subset(B, r, s, 0)) return false;
      if (!shifted_subset(B, s, r, e)) return false;
    }
  }
  return true;
}

std::optional<BeadWitness> rock_violation(const Multipartition& lam,
                                          const ResiduePermutation& theta) {
  Int e = lam.e();
  require(theta.e == e, "the residue permutation has the wrong modulus");
  BetaSet B = beta_numbers(lam);
  for (Int r = 1; r <= lam.level(); ++r) {
    std::vector<Int> above = B.members_above(r);
    if (above.empty()) continue;
    Int top = above.back();
    for (Int x = B.lowest_gap(r); x <= top; ++x) {
      if (B.contains(r, x)) continue;
      Int px = theta.position(imod(x, e));
      for (Int y = x + 1; y <= top; ++y) {
        if (!B.contains(r, y)) continue;
        if (px > theta.position(imod(y, e))) return BeadWitness{x, y, r};
      }
    }
  }
  return std::nullopt;
}

bool is_rock_multipartition(const Multipartition& lam, const ResiduePermutation& theta) {
  return !rock_violation(lam, theta).has_value();
}

bool is_rock_multicore(const Multipartition& rho, const ResiduePermutation& theta) {
  Int e = rho.e();
  require(theta.e == e, "the residue permutation has the wrong modulus");
  require(is_multicore(rho), "not a multicore");
  BetaSet B = beta_numbers(rho);
  bool ok = true;
  for (Int r = 1; ok && r <= rho.level(); ++r)
    for (Int a = 1; ok && a < e; ++a)
      for (Int b = a + 1; b <= e; ++b)
        if (B.hook_shift(r, theta.at(a), theta.at(b)) < -1) {
          ok = false;
          break;
        }
  internal_check(ok == is_rock_multipartition(rho, theta),
                 "hook criterion disagrees with the bead scan");
  return ok;
}

CapacityReport capacity(const Multipartition& rho, const ResiduePermutation& theta) {
  Int e = rho.e();
  require(theta.e == e, "the residue permutation has the wrong modulus");
  require(is_multicore(rho), "capacity needs a multicore");
  BetaSet B = beta_numbers(rho);
  CapacityReport rep;
  rep.theta = theta;
  Int mn = std::numeric_limits<Int>::max();
  for (Int r = 1; r <= rho.level(); ++r) {
    std::vector<Int> row;
    for (Int t = 1; t < e; ++t) {
      Int h = B.hook_shift(r, theta.at(t), theta.at(t + 1));
      row.push_back(h);
      mn = std::min(mn, h);
    }
    rep.shifts.push_back(std::move(row));
  }
  rep.cap = 1 + mn;
  return rep;
}

Multipartition scopes_psi(const Multipartition& lam, Int i) {
  Int e = lam.e();
  require(i >= 0 && i < e, "swap residue out of range");
  Int ip = imod(i + 1, e);
  BetaSet B = beta_numbers(lam);
  std::vector<std::pair<Int, std::vector<Int>>> comps;
  for (Int r = 1; r <= lam.level(); ++r) {
    std::vector<Int> above = B.members_above(r);
    Int top = above.empty() ? B.lowest_gap(r) - 1 : above.back();
    // Pick a floor whose residue stays put, so the solid region below it maps
    // onto itself and no bead in the window escapes downward past it.
    Int floor = B.lowest_gap(r) - e;
    while (imod(floor, e) == ip) --floor;
    std::vector<Int> members;
    for (Int v = floor; v <= top; ++v) {
      if (!B.contains(r, v)) continue;
      Int res = imod(v, e);
      members.push_back(res == i ? v + 1 : res == ip ? v - 1 : v);
    }
    comps.emplace_back(floor, std::move(members));
  }
  return BetaSet::from_members(e, lam.charges(), comps).to_multipartition();
}

Block scopes_block(const Block& b, Int i) {
  Int e = b.e();
  require(i >= 0 && i < e, "swap residue out of range");
  require(b.size() > 0, "cannot map an empty block through a runner swap");
  Int ip = imod(i + 1, e);
  for (const Multipartition& lam : b.members()) {
    BetaSet B = beta_numbers(lam);
    for (Int r = 1; r <= lam.level(); ++r)
      for (Int y : B.members_above(r))
        require(imod(y, e) != ip || B.contains(r, y - 1),
                "a member has a removable node blocking the runner swap");
  }
  std::vector<Multipartition> mapped;
  mapped.reserve(b.size());
  for (const Multipartition& lam : b.members()) mapped.push_back(scopes_psi(lam, i));
  RootVector content = mapped.front().content();
  return Block(e, b.charges(), std::move(content), std::move(mapped));
}

namespace {

// Whether some chain of single-node moves starting at rho removes (or adds)
// exactly the target content, never overshooting it in any residue.
bool reachable_by_steps(const Multipartition& rho, const RootVector& target,
                        bool removing, Int budget, Int& states) {
  Int e = rho.e();
  RootVector start = rho.content();
  if (removing && !componentwise_leq(target, start)) return false;
  std::set<Multipartition> layer{rho};
  for (Int step = 0; step < target.height(); ++step) {
    std::set<Multipartition> next;
    for (const Multipartition& lam : layer) {
      RootVector cur = lam.content();
      for (Int i = 0; i < e; ++i) {
        Int done = removing ? start.at(i) - cur.at(i) : cur.at(i) - start.at(i);
        if (done >= target.at(i)) continue;
        RootVector node = RootVector::simple(e, i);
        auto moves = removing ? removable_ribbons_of_content(lam, node)
                              : addable_ribbons_of_content(lam, node);
        for (const RibbonMove& m : moves)
          if (next.insert(m.result).second && ++states > budget)
            throw budget_error("separability search exceeded its budget");
      }
    }
    if (next.empty()) return false;
    layer = std::move(next);
  }
  return true;
}

}  // namespace

bool is_separable(const RootVector& omega, const RootVector& beta,
                  const std::vector<Int>& charges, Int budget) {
  Int e = omega.e;
  require(beta.e == e, "beta has the wrong modulus");
  require(!charges.empty(), "at least one charge component is needed");
  if (budget <= 0) budget = 200000;
  Int states = 0;

  std::vector<Multipartition> members;
  if (is_core_block(omega, charges)) members = multicores_of_content(omega, charges);
  else members = enumerate_block(omega, charges, budget).members();

  for (const Multipartition& rho : members) {
    std::vector<Int> sub(e, 0);
    while (true) {
      Int j = 0;
      while (j < e) {
        if (sub[j] < beta.at(j)) {
          ++sub[j];
          break;
        }
        sub[j] = 0;
        ++j;
      }
      if (j == e) break;
      RootVector piece(e, sub);
      if (reachable_by_steps(rho, piece, true, budget, states) &&
          reachable_by_steps(rho, piece, false, budget, states))
        return false;
    }
  }
  return true;
}

BlockClass classify_block(const RootVector& omega, const std::vector<Int>& charges) {
  Int e = omega.e;
  require(e >= 2, "e must be at least 2");
  require(!charges.empty(), "at least one charge component is needed");

  // The deepest delta-stripping level still holding a multicore is the core
  // block of the decomposition; below it nothing survives, so its lower
  // neighbour is empty as a block.
  std::optional<Int> found;
  RootVector eta;
  std::vector<Multipartition> cores;
  {
    std::optional<RootVector> cur = omega;
    RootVector dlt = RootVector::delta(e);
    Int k = 0;
    while (cur) {
      std::vector<Multipartition> mc = multicores_of_content(*cur, charges);
      if (!mc.empty()) {
        found = k;
        eta = *cur;
        cores = std::move(mc);
      }
      cur = subtract(*cur, dlt);
      ++k;
    }
  }
  if (!found) throw validation_error("the block is empty");
  Int d = *found;
  internal_check(is_core_block(eta, charges), "the stripped content is not a core block");

  // Candidate residue permutations, kept only when every core member passes
  // the bead scan. Past e = 6 the factorial sweep gives way to sorting one
  // member's runner maxima.
  std::vector<ResiduePermutation> passing;
  if (e <= 6) {
    std::vector<Int> perm(e);
    for (Int i = 0; i < e; ++i) perm[i] = i;
    do {
      ResiduePermutation cand(e, perm);
      bool all = true;
      for (const Multipartition& c : cores)
        if (!is_rock_multipartition(c, cand)) {
          all = false;
          break;
        }
      if (all) passing.push_back(std::move(cand));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    BetaSet B0 = beta_numbers(cores.front());
    std::vector<Int> order(e);
    for (Int i = 0; i < e; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](Int a, Int b) {
      Int ka = std::numeric_limits<Int>::max(), kb = ka;
      for (Int r = 1; r <= (Int)charges.size(); ++r) {
        ka = std::min(ka, B0.runner_max(r, a));
        kb = std::min(kb, B0.runner_max(r, b));
      }
      return ka < kb;
    });
    ResiduePermutation cand(e, order);
    bool all = true;
    for (const Multipartition& c : cores)
      if (!is_rock_multipartition(c, cand)) {
        all = false;
        break;
      }
    if (all) passing.push_back(std::move(cand));
  }

  std::optional<ResiduePermutation> theta;
  Int cap = 0;
  for (const ResiduePermutation& th : passing) {
    Int c = std::numeric_limits<Int>::max();
    for (const Multipartition& m : cores) c = std::min(c, capacity(m, th).cap);
    if (c >= 1) {
      internal_check(!theta || cap < 1, "two permutations with positive capacity");
      theta = th;
      cap = c;
    }
  }
  if (!theta && !passing.empty()) {
    theta = passing.front();
    cap = std::numeric_limits<Int>::max();
    for (const Multipartition& m : cores)
      cap = std::min(cap, capacity(m, *theta).cap);
  }

  BlockClass out;
  out.core_block = (d == 0);
  out.d = d;
  out.eta = eta;
  out.theta = theta;
  out.cap = theta ? cap : 0;
  out.rock = theta.has_value() && d <= cap;
  return out;
}

}  // namespace klr
