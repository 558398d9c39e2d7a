#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "klr/convex_order.hpp"
#include "klr/root_system.hpp"

using namespace klr;

namespace {

// Independent classifier: probe every interval root of the right height and
// every multiple of delta.
RootClass classify_oracle(const RootVector& v) {
  Int e = v.e, h = v.height();
  RootClass out;
  if (h == 0) return out;
  if (h % e == 0) {
    Int d = h / e;
    if (v == d * RootVector::delta(e)) {
      out = {RootKind::imaginary, 0, 0, d};
      return out;
    }
  }
  for (Int t = 0; t < e; ++t) {
    if (h % e != 0 && v == alpha_interval(e, t, h)) {
      out = {RootKind::real_root, t, h, 0};
      return out;
    }
  }
  return out;
}

void enumerate_vectors(Int e, Int cap, std::vector<RootVector>& out) {
  std::vector<Int> c(e, 0);
  while (true) {
    out.push_back(RootVector(e, c));
    Int i = 0;
    while (i < e && ++c[i] > cap) c[i++] = 0;
    if (i == e) break;
  }
}

// Every Kostant partition of omega, found by recursion over a fixed root list.
void kostant_rec(Int e, const std::vector<RootVector>& roots, size_t from,
                 const RootVector& rest, std::vector<std::pair<RootVector, Int>>& acc,
                 const ConvexPreorder& P, std::vector<KostantPartition>& out) {
  if (rest.is_zero()) {
    out.push_back(KostantPartition(e, acc, P));
    return;
  }
  if (from == roots.size()) return;
  kostant_rec(e, roots, from + 1, rest, acc, P, out);
  auto less_one = subtract(rest, roots[from]);
  if (less_one) {
    if (!acc.empty() && acc.back().first == roots[from])
      acc.back().second += 1;
    else
      acc.push_back({roots[from], 1});
    kostant_rec(e, roots, from, *less_one, acc, P, out);
    if (acc.back().second == 1)
      acc.pop_back();
    else
      acc.back().second -= 1;
  }
}

std::vector<KostantPartition> all_kostant_partitions(const RootVector& omega,
                                                     const ConvexPreorder& P) {
  Int e = omega.e;
  std::vector<RootVector> roots;
  for (Int L = 1; L <= omega.height(); ++L) {
    if (L % e == 0) continue;
    for (Int t = 0; t < e; ++t) {
      RootVector r = alpha_interval(e, t, L);
      if (componentwise_leq(r, omega)) roots.push_back(r);
    }
  }
  if (componentwise_leq(RootVector::delta(e), omega))
    roots.push_back(RootVector::delta(e));
  std::vector<std::pair<RootVector, Int>> acc;
  std::vector<KostantPartition> out;
  kostant_rec(e, roots, 0, omega, acc, P, out);
  return out;
}

ConvexPreorder reference_preorder_e4() {
  // 2x4 matrix whose realized residue order is (1,3,0,2).
  return ConvexPreorder(4, {{1, -1, 2, -2}, {0, -1, 1, 0}});
}

}  // namespace

TEST_CASE("interval roots sum consecutive simple roots cyclically") {
  CHECK(alpha_interval(4, 0, 4) == RootVector::delta(4));
  CHECK(alpha_interval(4, 2, 3) == RootVector(4, {1, 0, 1, 1}));
  CHECK(alpha_interval(4, 0, 11) == RootVector(4, {3, 3, 3, 2}));
  for (Int e = 2; e <= 5; ++e)
    for (Int t = 0; t < e; ++t)
      for (Int L = 1; L <= 30; ++L) CHECK(alpha_interval(e, t, L).height() == L);
  CHECK_THROWS_AS(alpha_interval(4, 0, 0), validation_error);
  CHECK_THROWS_AS(alpha_interval(1, 0, 1), validation_error);
}

TEST_CASE("classification separates real roots, imaginary roots, and non-roots") {
  RootClass c = classify(RootVector(4, {1, 0, 1, 1}));
  CHECK(c.kind == RootKind::real_root);
  CHECK(c.t == 2);
  CHECK(c.L == 3);

  c = classify(RootVector(3, {2, 2, 2}));
  CHECK(c.kind == RootKind::imaginary);
  CHECK(c.d == 2);

  CHECK(classify(RootVector(4, {2, 0, 0, 0})).kind == RootKind::not_a_root);
  CHECK(classify(RootVector::zero(4)).kind == RootKind::not_a_root);
}

TEST_CASE("classification agrees with the probe-all-intervals oracle") {
  for (Int e = 2; e <= 4; ++e) {
    std::vector<RootVector> all;
    enumerate_vectors(e, 3, all);
    for (const auto& v : all) {
      RootClass got = classify(v), want = classify_oracle(v);
      CHECK(got.kind == want.kind);
      if (got.kind == RootKind::real_root) {
        CHECK(got.t == want.t);
        CHECK(got.L == want.L);
      }
      if (got.kind == RootKind::imaginary) CHECK(got.d == want.d);
    }
  }
}

TEST_CASE("interval roots classify by their length mod e") {
  for (Int e = 2; e <= 6; ++e) {
    for (Int t = 0; t < e; ++t) {
      for (Int L = 1; L <= 5 * e; ++L) {
        RootClass c = classify(alpha_interval(e, t, L));
        if (L % e == 0) {
          CHECK(c.kind == RootKind::imaginary);
          CHECK(c.d == L / e);
        } else {
          CHECK(c.kind == RootKind::real_root);
          CHECK(c.t == t);
          CHECK(c.L == L);
        }
      }
    }
  }
}

TEST_CASE("finite projection subtracts the zeroth coordinate and kills delta") {
  CHECK(finite_projection(RootVector::delta(4)) == FiniteRootVector{4, {0, 0, 0}});
  CHECK(finite_projection(RootVector(4, {0, 0, 1, 1})) == FiniteRootVector{4, {0, 1, 1}});
  CHECK(finite_projection(RootVector(4, {1, 0, 1, 1})) == FiniteRootVector{4, {-1, 0, 0}});

  // linearity on a sample of vector pairs
  std::vector<RootVector> all;
  enumerate_vectors(3, 2, all);
  for (const auto& u : all) {
    for (const auto& v : all) {
      auto p = finite_projection(u + v);
      auto pu = finite_projection(u), pv = finite_projection(v);
      for (size_t i = 0; i < p.coeffs.size(); ++i)
        CHECK(p.coeffs[i] == pu.coeffs[i] + pv.coeffs[i]);
    }
  }
}

TEST_CASE("residue permutations validate their entries") {
  CHECK_THROWS_AS(ResiduePermutation(4, {1, 3, 0, 0}), validation_error);
  CHECK_THROWS_AS(ResiduePermutation(4, {1, 3, 0}), validation_error);
  CHECK_THROWS_AS(ResiduePermutation(1, {0}), validation_error);
  ResiduePermutation theta(4, {1, 3, 0, 2});
  CHECK(theta.at(1) == 1);
  CHECK(theta.at(4) == 2);
  CHECK(theta.position(0) == 3);
}

TEST_CASE("words carry their residue content") {
  Word w(4, {3, 0, 1, 2, 3, 0});
  CHECK(w.content() == RootVector(4, {2, 1, 1, 2}));
  CHECK(w.str() == "301230");
  CHECK(concat(w, Word(4, {1})).letters.size() == 7);
  CHECK_THROWS_AS(Word(4, {4}), validation_error);
}

TEST_CASE("Kostant partitions store entries sorted by the preorder, insertion order irrelevant") {
  auto P = reference_preorder_e4();
  RootVector a23(4, {0, 0, 1, 1});
  RootVector a01(4, {1, 1, 0, 0});
  RootVector d = RootVector::delta(4);
  KostantPartition k1(4, {{a01, 1}, {d, 2}, {a23, 1}}, P);
  KostantPartition k2(4, {{d, 1}, {a23, 1}, {d, 1}, {a01, 1}}, P);
  CHECK(k1.entries == k2.entries);
  CHECK(k1.same_entries(k2));
  CHECK(k1.entries[0].first == a23);  // alpha_2 + alpha_3 sits above delta here
  CHECK(k1.entries[1].first == d);
  CHECK(k1.entries[2].first == a01);
  CHECK(k1.total() == RootVector(4, {3, 3, 3, 3}));
  CHECK(k1.delta_multiplicity() == 2);

  CHECK_THROWS_AS(KostantPartition(4, {{RootVector(4, {2, 2, 2, 2}), 1}}, P),
                  validation_error);
  CHECK_THROWS_AS(KostantPartition(4, {{a23, 0}}, P), validation_error);
}

TEST_CASE("bilexicographic comparison matches hand-checked verdicts") {
  auto P = reference_preorder_e4();
  RootVector d = RootVector::delta(4);
  RootVector a23(4, {0, 0, 1, 1});
  RootVector a01(4, {1, 1, 0, 0});
  KostantPartition whole(4, {{d, 1}}, P);
  KostantPartition split(4, {{a23, 1}, {a01, 1}}, P);
  CHECK(compare_bilex(whole, whole, P) == Cmp::equal);
  CHECK(compare_bilex(split, whole, P) == Cmp::greater);
  CHECK(compare_bilex(whole, split, P) == Cmp::less);

  KostantPartition other(4, {{a23, 1}}, P);
  CHECK_THROWS_AS(compare_bilex(whole, other, P), validation_error);
}

TEST_CASE("a one-sided win in each lexicographic direction is incomparable") {
  // With residues ordered (0,1) the indivisible roots inside (2,2) sort as
  // alpha_1 > (1,2) > delta > (2,1) > alpha_0; the two partitions below beat
  // each other at opposite ends of that list.
  auto P = preorder_from_permutation(ResiduePermutation(2, {0, 1}));
  KostantPartition x(2, {{RootVector(2, {2, 1}), 1}, {RootVector(2, {0, 1}), 1}}, P);
  KostantPartition y(2, {{RootVector(2, {1, 2}), 1}, {RootVector(2, {1, 0}), 1}}, P);
  CHECK(compare_bilex(x, y, P) == Cmp::incomparable);
  CHECK(compare_bilex(y, x, P) == Cmp::incomparable);
}

TEST_CASE("bilexicographic comparison is a partial order on exhaustive small totals") {
  struct Case {
    RootVector omega;
    ConvexPreorder P;
  };
  std::vector<Case> cases;
  cases.push_back({RootVector(2, {4, 4}),
                   preorder_from_permutation(ResiduePermutation(2, {0, 1}))});
  cases.push_back({RootVector(2, {3, 3}),
                   preorder_from_permutation(ResiduePermutation(2, {1, 0}))});
  cases.push_back({RootVector(3, {2, 2, 2}),
                   preorder_from_permutation(ResiduePermutation(3, {2, 0, 1}))});
  cases.push_back({RootVector(4, {1, 2, 1, 1}), reference_preorder_e4()});
  for (const auto& c : cases) {
    auto all = all_kostant_partitions(c.omega, c.P);
    REQUIRE(all.size() >= 2);
    size_t n = all.size();
    size_t incomparable = 0, violations = 0;
    std::vector<std::vector<Cmp>> rel(n, std::vector<Cmp>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        rel[i][j] = compare_bilex(all[i], all[j], c.P);
        if (rel[i][j] == Cmp::incomparable) ++incomparable;
      }
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if ((rel[i][j] == Cmp::equal) != all[i].same_entries(all[j])) ++violations;
        if (rel[i][j] == Cmp::greater && rel[j][i] != Cmp::less) ++violations;
        if (rel[i][j] == Cmp::incomparable && rel[j][i] != Cmp::incomparable) ++violations;
        if (rel[i][j] != Cmp::greater) continue;
        for (size_t k = 0; k < n; ++k)
          if (rel[j][k] == Cmp::greater && rel[i][k] != Cmp::greater) ++violations;
      }
    }
    CHECK(violations == 0);
    if (c.omega.e == 2) CHECK(incomparable > 0);
  }
}

TEST_CASE("root partitions validate the imaginary part against the delta multiplicity") {
  auto P = reference_preorder_e4();
  KostantPartition real_only(4, {{RootVector(4, {0, 0, 1, 1}), 1}}, P);
  RootPartition padded(real_only, {});
  CHECK(padded.nu.size() == 3);
  CHECK(size_of(padded.nu) == 0);

  KostantPartition k(4, {{RootVector::delta(4), 2}}, P);
  CHECK_THROWS_AS(RootPartition(k, PartitionTuple{{1}, {}, {}}), validation_error);
  CHECK_THROWS_AS(RootPartition(k, PartitionTuple{{2}, {}}), validation_error);
  CHECK_THROWS_AS(RootPartition(k, PartitionTuple{{1, 2}, {}, {}}), validation_error);
  CHECK_NOTHROW(RootPartition(k, PartitionTuple{{1, 1}, {}, {}}));
  CHECK_NOTHROW(RootPartition(k, PartitionTuple{{2}, {}, {}}));
}

TEST_CASE("bilexicographic dominance refines ties by dominance of the imaginary part") {
  auto P = reference_preorder_e4();
  KostantPartition k(4, {{RootVector::delta(4), 2}}, P);
  RootPartition row(k, PartitionTuple{{2}, {}, {}});
  RootPartition col(k, PartitionTuple{{1, 1}, {}, {}});
  CHECK(compare_bd(row, row, P) == Cmp::equal);
  CHECK(compare_bd(row, col, P) == Cmp::greater);
  CHECK(compare_bd(col, row, P) == Cmp::less);

  RootVector a23(4, {0, 0, 1, 1});
  RootVector a01(4, {1, 1, 0, 0});
  KostantPartition bigger(4, {{a23, 1}, {a01, 1}, {RootVector::delta(4), 1}}, P);
  RootPartition p1(bigger, PartitionTuple{{1}, {}, {}});
  CHECK(compare_bd(p1, row, P) == Cmp::greater);
  CHECK(compare_bd(row, p1, P) == Cmp::less);
}

TEST_CASE("incomparable imaginary parts at equal Kostant partitions stay incomparable") {
  auto P = preorder_from_permutation(ResiduePermutation(3, {0, 1, 2}));
  KostantPartition k(3, {{RootVector::delta(3), 3}}, P);
  RootPartition x(k, PartitionTuple{{2}, {1}});
  RootPartition y(k, PartitionTuple{{1, 1, 1}, {}});
  CHECK(compare_bd(x, y, P) == Cmp::incomparable);
  CHECK(compare_bd(y, x, P) == Cmp::incomparable);
}
