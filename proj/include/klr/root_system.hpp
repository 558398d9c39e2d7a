#pragma once

// Root-lattice arithmetic for affine type A: root vectors and their
// classification, residue permutations, Kostant partitions, root partitions,
// and residue words.

#include <optional>
#include <utility>
#include <vector>

#include "klr/basics.hpp"

namespace klr {

class ConvexPreorder;

// A nonnegative integer vector over the simple roots alpha_0..alpha_{e-1}.
struct RootVector {
  Int e = 0;
  std::vector<Int> coeffs;

  RootVector() = default;
  RootVector(Int e_, std::vector<Int> coeffs_);

  static RootVector zero(Int e);
  static RootVector simple(Int e, Int i);
  static RootVector delta(Int e);

  Int height() const;
  bool is_zero() const;
  Int at(Int i) const;  // coefficient of alpha_{i mod e}

  friend bool operator==(const RootVector& a, const RootVector& b) = default;
};

RootVector operator+(const RootVector& a, const RootVector& b);
RootVector operator*(Int k, const RootVector& v);
// Componentwise difference, absent if any coefficient would go negative.
std::optional<RootVector> subtract(const RootVector& a, const RootVector& b);
bool componentwise_leq(const RootVector& a, const RootVector& b);
// Strict total order on coefficient vectors, used only for canonical storage.
bool lex_less(const RootVector& a, const RootVector& b);

// The signed vector (v_1 - v_0, ..., v_{e-1} - v_0), i.e. v mod delta.
struct FiniteRootVector {
  Int e = 0;
  std::vector<Int> coeffs;  // length e - 1

  friend bool operator==(const FiniteRootVector& a, const FiniteRootVector& b) = default;
};

// alpha_{t} + alpha_{t+1} + ... + alpha_{t+L-1} with cyclically wrapping
// indices; every positive root arises this way.
RootVector alpha_interval(Int e, Int t, Int L);

enum class RootKind { real_root, imaginary, not_a_root };

struct RootClass {
  RootKind kind = RootKind::not_a_root;
  Int t = 0;  // real: the starting residue, v = alpha_interval(t, L)
  Int L = 0;  // real: the height
  Int d = 0;  // imaginary: v = d * delta
};

RootClass classify(const RootVector& v);
bool is_positive_root(const RootVector& v);
// Real roots and delta itself; the keys allowed in a Kostant partition.
bool is_indivisible_root(const RootVector& v);

FiniteRootVector finite_projection(const RootVector& v);

// A permutation (theta_1, ..., theta_e) of the residues [0, e-1].
struct ResiduePermutation {
  Int e = 0;
  std::vector<Int> theta;

  ResiduePermutation() = default;
  ResiduePermutation(Int e_, std::vector<Int> theta_);

  Int at(Int a) const;        // theta_a, 1-based as in the formulas
  Int position(Int res) const;  // the a with theta_a = res

  friend bool operator==(const ResiduePermutation& a, const ResiduePermutation& b) = default;
};

// A finite sequence of residues in [0, e-1].
struct Word {
  Int e = 0;
  std::vector<Int> letters;

  Word() = default;
  Word(Int e_, std::vector<Int> letters_);

  RootVector content() const;
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) = default;
};

Word concat(const Word& a, const Word& b);

// A multiset of indivisible roots with multiplicities, summing to the total.
// Entries are kept strictly descending with respect to the preorder supplied
// at construction, so equal partitions built in any order store identically.
struct KostantPartition {
  Int e = 0;
  std::vector<std::pair<RootVector, Int>> entries;

  KostantPartition() = default;
  KostantPartition(Int e_, std::vector<std::pair<RootVector, Int>> raw,
                   const ConvexPreorder& order);

  RootVector total() const;
  Int delta_multiplicity() const;
  Int multiplicity(const RootVector& beta) const;
  // Order-insensitive equality of the underlying multisets.
  bool same_entries(const KostantPartition& other) const;
};

// A Kostant partition together with an (e-1)-tuple of partitions whose total
// size equals the delta multiplicity.
struct RootPartition {
  KostantPartition kostant;
  PartitionTuple nu;  // always stored with exactly e - 1 components

  RootPartition() = default;
  RootPartition(KostantPartition kostant_, PartitionTuple nu_);
};

enum class Cmp { less, equal, greater, incomparable };

// Bilexicographic comparison: K beats K' when it beats it both at the lowest
// difference (scanning upward) and at the highest difference (scanning
// downward) of the preorder-sorted coefficient sequences.
Cmp compare_bilex(const KostantPartition& k1, const KostantPartition& k2,
                  const ConvexPreorder& order);

// Bilexicographic dominance: compare the Kostant partitions first, break
// exact ties by dominance of the imaginary parts.
Cmp compare_bd(const RootPartition& p1, const RootPartition& p2,
               const ConvexPreorder& order);

}  // namespace klr
