#pragma once

// Explicit shape constructions: cuspidal ribbon walks, delta-ribbon templates,
// dilations, the diagrams attached to root partitions, bead-move skew
// diagrams over a RoCK core, Gelfand-Graev words, and a deterministic
// fabricator for RoCK cores of prescribed capacity.

#include <utility>
#include <vector>

#include "klr/basics.hpp"
#include "klr/blocks.hpp"
#include "klr/convex_order.hpp"
#include "klr/diagrams.hpp"
#include "klr/root_system.hpp"

namespace klr {

// A tuple of partitions indexed by a residue t in [0, e-1] and a component
// r in [1, ell], stored flat with t varying fastest.
class EellMultipartition {
 public:
  EellMultipartition(Int e, Int ell, PartitionTuple comps);

  Int e() const { return e_; }
  Int ell() const { return ell_; }
  Int total() const;
  const Partition& at(Int t, Int r) const;
  const PartitionTuple& components() const { return comps_; }

  friend bool operator==(const EellMultipartition& a, const EellMultipartition& b) = default;
  friend bool operator<(const EellMultipartition& a, const EellMultipartition& b);

 private:
  Int e_ = 0;
  Int ell_ = 0;
  PartitionTuple comps_;
};

// The cuspidal ribbon walk out of u: nodes of residue a+1, a+2, ... are added
// one at a time, stepping north of the previous node when the content so far
// lies above beta and east when it lies below. beta must be a real positive
// root, whose starting residue pins res(u), or delta itself, which walks e
// steps from any starting residue.
SkewDiagram zeta_ribbon(const RootVector& beta, Node u, const ConvexPreorder& order);

// The delta-ribbon with i+1 rows: the walk started at residue theta_{e-i}+1,
// anchored with its southwest node on row 0.
SkewDiagram zeta_delta(Int i, const ConvexPreorder& order);

// The unique skew diagram of content delta with a+1 rows whose rows read the
// residue runs cut out by theta: row j runs from phi^{j+1}+1 up to phi^j,
// where phi lists, from theta_{e-a} downward, the residues placed at position
// e-a or later by theta. Canonically anchored.
SkewDiagram theta_ribbon(const ResiduePermutation& theta, Int a);

// The i-dilation of nu: one shifted copy of zeta_delta(i) per node of nu,
// the copy of (x,y) displaced by rows (x-1)(i+1) - (y-1)i and columns
// (y-1)(e-i) - (x-1)(e-i-1), which makes neighboring copies meet corner to
// corner. Connected, of content |nu| delta.
SkewDiagram dilate(Int i, const Partition& nu, const ConvexPreorder& order);

// One dilation component per residue 1..e-1: (dil_1(nu^1) | ... |
// dil_{e-1}(nu^{e-1})). Components of empty partitions stay empty.
std::vector<SkewDiagram> zeta_nu(const PartitionTuple& nu, const ConvexPreorder& order);

// The diagram sequence of a root partition: the walk ribbon of each real
// part, repeated with its multiplicity, in descending preorder, with the
// e-1 dilation components of the imaginary tuple in the delta position.
std::vector<SkewDiagram> zeta_pi(const RootPartition& pi, const ConvexPreorder& order);

// Push the beta numbers of rho along nu: for each component r and residue
// index t, the qth largest bead on runner theta_{e-t} moves up by e times
// the qth part of nu^{(t,r)}. rho must be a RoCK multicore for theta and
// |nu| must fit inside its capacity.
Multipartition apply_bead_moves(const EellMultipartition& nu, const Multipartition& rho,
                                const ResiduePermutation& theta);

// The skew diagram of the moved multipartition over rho.
SkewDiagram nu_theta_rho(const EellMultipartition& nu, const Multipartition& rho,
                         const ResiduePermutation& theta);

// The ribbon contributed by the node (x, y) of component (t, r): the
// difference between the bead moves of the x-by-y rectangle and of the
// rectangle with its southeast corner removed. Always a (theta, t)-ribbon.
SkewDiagram node_ribbon(Int t, Int r, Int x, Int y, const Multipartition& rho,
                        const ResiduePermutation& theta);

// A residue word together with the data it was built from.
struct GGWord {
  Word word;
  ResiduePermutation theta;
  EellMultipartition nu;
};

// The leading row word of the (theta, a)-ribbon template.
Word gg_segment(const ResiduePermutation& theta, Int a);
// Each letter repeated n times, then segments concatenated part by part.
Word word_power(const Word& w, Int n);
Word word_partition(const Word& w, const Partition& lam);
// Concatenation of word_partition(gg_segment(theta, t), nu^{(t,r)}) over
// components, t varying fastest. Length e|nu|, content |nu| delta.
GGWord gg_word(const ResiduePermutation& theta, const EellMultipartition& nu);
GGWord gg_word(const ResiduePermutation& theta, const PartitionTuple& nu);

// A level-one charge in [0, e) and an e-core that is a RoCK multicore for
// theta with capacity at least d: runner theta_a carries d(a-1) beads more
// than the staircase baseline, then the whole set is slid to charge range.
std::pair<Int, Multipartition> build_rock_core(const ResiduePermutation& theta, Int d);

// Every row step lambda_i - lambda_{i+1}, including the last part, is < e.
bool is_e_restricted(Int e, const Partition& lam);

// Prepend an empty component: (nu^1|...|nu^{e-1}) becomes the e-tuple
// (0|nu^1|...|nu^{e-1}) at level one.
EellMultipartition hat(const PartitionTuple& nu);

// The number of c-tuples of partitions of total size d.
Int count_multipartitions(Int c, Int d);

}  // namespace klr
