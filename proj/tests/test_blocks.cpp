#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "klr/blocks.hpp"
#include "fixtures.hpp"

using namespace klr;
using namespace klr::fixtures;

namespace {

std::vector<Partition> partitions_up_to(Int n) {
  std::vector<Partition> out{{}};
  Partition cur;
  std::function<void(Int, Int)> rec = [&](Int left, Int maxp) {
    for (Int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      out.push_back(cur);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Multipartition> all_bipartitions(Int e, const std::vector<Int>& charges,
                                             Int maxsize) {
  std::vector<Partition> parts = partitions_up_to(maxsize);
  std::vector<Multipartition> out;
  for (const Partition& a : parts)
    for (const Partition& b : parts)
      if (size_of(a) + size_of(b) <= maxsize)
        out.emplace_back(e, charges, PartitionTuple{a, b});
  return out;
}

using ContentBuckets = std::map<std::vector<Int>, std::vector<Multipartition>>;

ContentBuckets bucket_by_content(const std::vector<Multipartition>& all) {
  ContentBuckets buckets;
  for (const Multipartition& m : all) buckets[m.content().coeffs].push_back(m);
  for (auto& [key, bucket] : buckets) std::sort(bucket.begin(), bucket.end());
  return buckets;
}

RootVector plus_delta(const RootVector& v, Int k) {
  std::vector<Int> c = v.coeffs;
  for (Int& x : c) x += k;
  return RootVector(v.e, c);
}

}  // namespace

TEST_CASE("multicores solve the runner deviation system") {
  std::vector<Multipartition> trio = core_block_trio_e4();
  std::sort(trio.begin(), trio.end());
  RootVector omega = trio[0].content();

  std::vector<Multipartition> found = multicores_of_content(omega, {0, 3});
  CHECK(found == trio);

  Multipartition rho = rock_bicore_e4();
  std::vector<Multipartition> just_rho = multicores_of_content(rho.content(), {2, 0});
  REQUIRE(just_rho.size() == 1);
  CHECK(just_rho[0] == rho);

  std::vector<Multipartition> empties = multicores_of_content(RootVector::zero(4), {2, 0});
  REQUIRE(empties.size() == 1);
  CHECK(empties[0] == Multipartition(4, {2, 0}, PartitionTuple(2)));

  // At e = 2 both partitions of two nodes carry a full-length hook, so the
  // delta content has no multicore.
  CHECK(multicores_of_content(RootVector::delta(2), {0}).empty());

  // Exhaustive cross-check against brute force at desk scale.
  ContentBuckets buckets = bucket_by_content(all_bipartitions(3, {0, 1}, 6));
  Int bad = 0;
  for (const auto& [key, bucket] : buckets) {
    std::vector<Multipartition> expected;
    for (const Multipartition& m : bucket)
      if (is_multicore(m)) expected.push_back(m);
    if (multicores_of_content(RootVector(3, key), {0, 1}) != expected) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("core blocks enumerate through the deviation engine") {
  std::vector<Multipartition> trio = core_block_trio_e4();
  std::sort(trio.begin(), trio.end());
  RootVector omega = trio[0].content();

  CHECK(is_core_block(omega, {0, 3}));
  Block blk = enumerate_core_block(omega, {0, 3});
  CHECK(blk.size() == 3);
  CHECK(blk.members() == trio);

  // One delta up the block is no longer a core block.
  CHECK_FALSE(is_core_block(plus_delta(omega, 1), {0, 3}));
  CHECK_THROWS_AS(enumerate_core_block(plus_delta(omega, 1), {0, 3}), validation_error);

  Multipartition rho = rock_bicore_e4();
  CHECK(is_core_block(rho.content(), {2, 0}));
  CHECK_FALSE(is_core_block(plus_delta(rho.content(), 10), {2, 0}));

  CHECK_FALSE(is_core_block(RootVector::delta(2), {0}));
  CHECK(is_core_block(RootVector::zero(2), {0}));
  CHECK(block_has_members(RootVector::delta(2), {0}));
  CHECK(block_has_members(plus_delta(rho.content(), 10), {2, 0}));
  CHECK_FALSE(block_has_members(2 * RootVector::simple(3, 0), {0}));
}

TEST_CASE("layered enumeration agrees with the deviation engine") {
  // The weight-one block at e = 2 holds exactly the two partitions of two.
  Block db = enumerate_block(RootVector::delta(2), {0});
  REQUIRE(db.size() == 2);
  CHECK(db.members()[0] == Multipartition(2, {0}, {Partition{1, 1}}));
  CHECK(db.members()[1] == Multipartition(2, {0}, {Partition{2}}));

  Block zero = enumerate_block(RootVector::zero(4), {2, 0});
  REQUIRE(zero.size() == 1);
  CHECK(zero.members()[0] == Multipartition(4, {2, 0}, PartitionTuple(2)));

  CHECK(enumerate_block(2 * RootVector::simple(3, 0), {0}).size() == 0);

  // Exhaustive agreement with brute force, and with the core engine wherever
  // the content is a core block.
  ContentBuckets buckets = bucket_by_content(all_bipartitions(3, {0, 1}, 4));
  Int bad = 0, cores_checked = 0;
  for (const auto& [key, bucket] : buckets) {
    RootVector omega(3, key);
    Block blk = enumerate_block(omega, {0, 1});
    if (blk.members() != bucket) ++bad;
    if (is_core_block(omega, {0, 1})) {
      ++cores_checked;
      if (enumerate_core_block(omega, {0, 1}).members() != bucket) ++bad;
    }
  }
  CHECK(bad == 0);
  CHECK(cores_checked > 0);

  std::vector<Multipartition> trio = core_block_trio_e4();
  CHECK_THROWS_AS(enumerate_block(trio[0].content(), {0, 3}, 50), budget_error);
}

TEST_CASE("kappa cores pass the beta sandwich") {
  CHECK(is_kappa_core(rock_bicore_e4()));
  CHECK(is_kappa_core(capacity_core_e4()));
  CHECK(is_kappa_core(Multipartition(4, {2, 0}, PartitionTuple(2))));
  CHECK_FALSE(is_kappa_core(rock_member_e4()));
  CHECK_FALSE(is_kappa_core(non_rock_member_e4()));
  for (const Multipartition& m : core_block_trio_e4()) CHECK_FALSE(is_kappa_core(m));

  // Being a kappa-core, having defect zero, and sitting alone in the block
  // are one and the same property.
  ContentBuckets buckets = bucket_by_content(all_bipartitions(3, {0, 1}, 6));
  Int bad = 0;
  for (const auto& [key, bucket] : buckets)
    for (const Multipartition& m : bucket) {
      bool alone = bucket.size() == 1;
      if (is_kappa_core(m) != alone) ++bad;
      if ((m.defect() == 0) != alone) ++bad;
    }
  CHECK(bad == 0);

  // The same property again as the absence of a content-matched sandwich.
  Int bad_sandwich = 0;
  for (const auto& [key, bucket] : buckets) {
    RootVector omega(3, key);
    if (omega.height() > 4) continue;
    bool separable = is_separable(omega, omega, {0, 1});
    if (separable != (bucket.size() == 1)) ++bad_sandwich;
  }
  CHECK(bad_sandwich == 0);
}

TEST_CASE("rock membership scans bead pairs against the runner order") {
  ResiduePermutation theta = reference_theta_e4();
  Multipartition rho = rock_bicore_e4();

  CHECK(is_rock_multipartition(rho, theta));
  CHECK(is_rock_multipartition(rock_member_e4(), theta));
  std::optional<BeadWitness> w = rock_violation(non_rock_member_e4(), theta);
  REQUIRE(w.has_value());
  CHECK(*w == BeadWitness{-8, -5, 1});
  CHECK_FALSE(is_rock_multipartition(non_rock_member_e4(), theta));

  // The member ten layers up keeps the runner discipline but is no multicore,
  // so the hook-shift form of the question rejects it outright.
  CHECK_FALSE(is_multicore(rock_member_e4()));
  CHECK_THROWS_AS(is_rock_multicore(rock_member_e4(), theta), validation_error);

  CHECK(is_multicore(rho));
  CHECK(is_rock_multicore(rho, theta));
  for (const Multipartition& m : core_block_trio_e4()) {
    CHECK(is_multicore(m));
    CHECK(is_rock_multicore(m, theta));
  }

  // The empty bipartition has no bead above any gap, so every runner order
  // accepts it; each call also cross-checks the two criteria internally.
  Multipartition empty(4, {2, 0}, PartitionTuple(2));
  std::vector<Int> perm{0, 1, 2, 3};
  Int rho_hits = 0;
  do {
    ResiduePermutation cand(4, perm);
    CHECK(is_rock_multicore(empty, cand));
    if (is_rock_multicore(rho, cand)) ++rho_hits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(rho_hits >= 1);
}

TEST_CASE("capacity reports hook shifts along the runner order") {
  ResiduePermutation theta = reference_theta_e4();

  CapacityReport one = capacity(capacity_core_e4(), theta);
  CHECK(one.cap == 4);
  CHECK(one.shifts == std::vector<std::vector<Int>>{{3, 3, 3}});

  CapacityReport two = capacity(rock_bicore_e4(), theta);
  CHECK(two.cap == 2);
  CHECK(two.shifts == std::vector<std::vector<Int>>{{2, 2, 2}, {2, 1, 2}});

  Multipartition empty1(4, {0}, PartitionTuple(1));
  CapacityReport asc = capacity(empty1, ResiduePermutation(4, {0, 1, 2, 3}));
  CHECK(asc.cap == 1);
  CHECK(asc.shifts == std::vector<std::vector<Int>>{{0, 0, 0}});
  CHECK(capacity(empty1, ResiduePermutation(4, {3, 2, 1, 0})).cap == 0);

  CHECK_THROWS_AS(capacity(rock_member_e4(), theta), validation_error);

  for (const Multipartition& m : core_block_trio_e4()) CHECK(capacity(m, theta).cap >= 1);
}

TEST_CASE("runner swaps act as involutions on beta sets") {
  // At e = 2 the swap exchanges the two runners: the row pair and the column
  // pair trade places, and the single box grows a staircase.
  Multipartition row2(2, {0}, {Partition{2}});
  Multipartition col2(2, {0}, {Partition{1, 1}});
  Multipartition box(2, {0}, {Partition{1}});
  Multipartition stair(2, {0}, {Partition{2, 1}});
  CHECK(scopes_psi(row2, 0) == col2);
  CHECK(scopes_psi(col2, 0) == row2);
  CHECK(scopes_psi(box, 0) == stair);
  CHECK(scopes_psi(stair, 0) == box);

  std::vector<Multipartition> all = all_bipartitions(3, {0, 1}, 5);
  Int bad_involution = 0, bad_multicore = 0;
  for (const Multipartition& m : all) {
    for (Int i = 0; i < 3; ++i) {
      Multipartition once = scopes_psi(m, i);
      if (!(scopes_psi(once, i) == m)) ++bad_involution;
      if (is_multicore(m) && !is_multicore(once)) ++bad_multicore;
    }
  }
  CHECK(bad_involution == 0);
  CHECK(bad_multicore == 0);

  CHECK_THROWS_AS(scopes_psi(box, 2), validation_error);
}

TEST_CASE("block runner swaps demand no blocking removable nodes") {
  Multipartition a(4, {0, 0}, PartitionTuple{Partition{2, 1}, Partition{2}});
  Multipartition b(4, {0, 0}, PartitionTuple{Partition{2}, Partition{2, 1}});
  Block blk = enumerate_block(a.content(), {0, 0});
  REQUIRE(blk.size() == 2);
  std::vector<Multipartition> pair{a, b};
  std::sort(pair.begin(), pair.end());
  CHECK(blk.members() == pair);

  // Removable nodes of both members carry residues 1 and 3, so swaps pulling
  // those residues down are blocked while the other two go through.
  CHECK_THROWS_AS(scopes_block(blk, 0), validation_error);
  CHECK_THROWS_AS(scopes_block(blk, 2), validation_error);

  for (Int i : {Int(1), Int(3)}) {
    Block mapped = scopes_block(blk, i);
    CHECK(mapped.size() == blk.size());
    std::vector<Multipartition> expected{scopes_psi(a, i), scopes_psi(b, i)};
    std::sort(expected.begin(), expected.end());
    CHECK(mapped.members() == expected);
    // The image is a complete block in its own right.
    CHECK(enumerate_block(mapped.content(), {0, 0}).members() == mapped.members());
  }
}

TEST_CASE("separability finds content-matched sandwiches") {
  // e = 4, level two with both charges zero: the block of ((2,1)|(2)) splits
  // off its 0,1-part but not its 2,3-part.
  Multipartition a(4, {0, 0}, PartitionTuple{Partition{2, 1}, Partition{2}});
  RootVector omega = a.content();
  RootVector beta01 = RootVector::simple(4, 0) + RootVector::simple(4, 1);
  RootVector beta23 = RootVector::simple(4, 2) + RootVector::simple(4, 3);
  CHECK(is_separable(omega, beta01, {0, 0}));
  CHECK_FALSE(is_separable(omega, beta23, {0, 0}));

  // The weight-one block at e = 2: removing and adding a 1-node both succeed
  // at the row pair, while no member sheds a 0-node.
  CHECK(is_separable(RootVector::delta(2), RootVector::simple(2, 0), {0}));
  CHECK_FALSE(is_separable(RootVector::delta(2), RootVector::simple(2, 1), {0}));

  // Kappa-core contents are separable against anything.
  RootVector core_content = rock_bicore_e4().content();
  CHECK(is_separable(core_content, RootVector::delta(4), {2, 0}));
  CHECK(is_separable(core_content, plus_delta(RootVector::simple(4, 0), 1), {2, 0}));

  // A rock core block tolerates any piece within e times its capacity.
  RootVector trio_content = core_block_trio_e4()[0].content();
  CHECK(is_separable(trio_content, RootVector::simple(4, 0), {0, 3}));
  CHECK(is_separable(trio_content, RootVector::delta(4), {0, 3}));
}

TEST_CASE("classification strips delta layers down to a core block") {
  std::vector<Multipartition> trio = core_block_trio_e4();
  RootVector omega = trio[0].content();
  BlockClass cls = classify_block(omega, {0, 3});
  CHECK(cls.core_block);
  CHECK(cls.rock);
  CHECK(cls.d == 0);
  CHECK(cls.eta == omega);
  REQUIRE(cls.theta.has_value());
  CHECK(*cls.theta == reference_theta_e4());
  Int expected_cap = std::numeric_limits<Int>::max();
  for (const Multipartition& m : trio)
    expected_cap = std::min(expected_cap, capacity(m, *cls.theta).cap);
  CHECK(cls.cap == expected_cap);
  CHECK(cls.cap >= 1);

  Multipartition rho = rock_bicore_e4();
  BlockClass small = classify_block(rho.content(), {2, 0});
  CHECK(small.core_block);
  CHECK(small.rock);
  CHECK(small.d == 0);
  CHECK(small.cap == 2);
  REQUIRE(small.theta.has_value());
  CHECK(*small.theta == reference_theta_e4());

  // Ten layers up the same tower the capacity is exhausted.
  BlockClass big = classify_block(plus_delta(rho.content(), 10), {2, 0});
  CHECK_FALSE(big.core_block);
  CHECK_FALSE(big.rock);
  CHECK(big.d == 10);
  CHECK(big.eta == rho.content());
  CHECK(big.cap == 2);
  REQUIRE(big.theta.has_value());
  CHECK(*big.theta == reference_theta_e4());

  // The weight-one block at e = 2 sits one layer over the empty core and
  // just fits its capacity.
  BlockClass wt1 = classify_block(RootVector::delta(2), {0});
  CHECK_FALSE(wt1.core_block);
  CHECK(wt1.rock);
  CHECK(wt1.d == 1);
  CHECK(wt1.eta == RootVector::zero(2));
  CHECK(wt1.cap == 1);
  REQUIRE(wt1.theta.has_value());
  CHECK(*wt1.theta == ResiduePermutation(2, {0, 1}));

  BlockClass nothing = classify_block(RootVector::zero(4), {2, 0});
  CHECK(nothing.core_block);
  CHECK(nothing.rock);
  CHECK(nothing.d == 0);

  CHECK_THROWS_AS(classify_block(2 * RootVector::simple(3, 0), {0}), validation_error);
}

TEST_CASE("kappa cores keep hook shifts within one step of each other") {
  std::vector<Multipartition> cores;
  for (const Multipartition& m : all_bipartitions(3, {0, 2}, 6))
    if (is_kappa_core(m)) cores.push_back(m);
  REQUIRE(cores.size() > 5);

  Int bad_spread = 0, missing_theta = 0;
  for (const Multipartition& m : cores) {
    BetaSet B = beta_numbers(m);
    for (Int i = 0; i < 3; ++i)
      for (Int j = 0; j < 3; ++j) {
        if (i == j) continue;
        Int lo = B.hook_shift(1, i, j), hi = B.hook_shift(2, i, j);
        if (lo > hi) std::swap(lo, hi);
        if (hi - lo > 1) ++bad_spread;
      }

    std::vector<Int> perm{0, 1, 2};
    bool any = false;
    do {
      if (is_rock_multicore(m, ResiduePermutation(3, perm))) any = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!any) ++missing_theta;
  }
  CHECK(bad_spread == 0);
  CHECK(missing_theta == 0);
}
