#pragma once

#include <optional>
#include <vector>

#include "klr/diagrams.hpp"
#include "klr/root_system.hpp"

namespace klr {

// All multipartitions of one content and multicharge, canonically ordered.
class Block {
 public:
  Block(Int e, std::vector<Int> charges, RootVector content,
        std::vector<Multipartition> members);

  Int e() const { return e_; }
  const std::vector<Int>& charges() const { return charges_; }
  const RootVector& content() const { return content_; }
  const std::vector<Multipartition>& members() const { return members_; }
  Int size() const { return (Int)members_.size(); }

  friend bool operator==(const Block& a, const Block& b) = default;

 private:
  Int e_;
  std::vector<Int> charges_;
  RootVector content_;
  std::vector<Multipartition> members_;
};

// Every multicore of the given content, found by solving the runner
// deviation system: per component the deviations sum to zero, and per runner
// they sum to the cyclic content difference c_s - c_{s+1}.
std::vector<Multipartition> multicores_of_content(const RootVector& omega,
                                                  const std::vector<Int>& charges);

// Whether any multipartition at all has this content: strip delta repeatedly
// and look for a multicore at each level.
bool block_has_members(const RootVector& omega, const std::vector<Int>& charges);

bool is_core_block(const RootVector& omega, const std::vector<Int>& charges);

// Layered search adding one node at a time, keeping partial contents under
// omega. budget caps the number of distinct states (0 = default).
Block enumerate_block(const RootVector& omega, const std::vector<Int>& charges,
                      Int budget = 0);

// Fast path for core blocks: their members are exactly the multicores of the
// content, so the deviation solver enumerates them directly.
Block enumerate_core_block(const RootVector& omega, const std::vector<Int>& charges);

bool is_multicore(const Multipartition& rho);

// Beta-set sandwich test: components nest within one runner shift when their
// reduced charges are ordered.
bool is_kappa_core(const Multipartition& rho);

struct BeadWitness {
  Int x = 0, y = 0, comp = 1;

  friend bool operator==(const BeadWitness& a, const BeadWitness& b) = default;
};

// First bead pair (absent x below present y in one component) whose residues
// sit out of order under theta, if any.
std::optional<BeadWitness> rock_violation(const Multipartition& lam,
                                          const ResiduePermutation& theta);
bool is_rock_multipartition(const Multipartition& lam, const ResiduePermutation& theta);
bool is_rock_multicore(const Multipartition& rho, const ResiduePermutation& theta);

struct CapacityReport {
  ResiduePermutation theta;
  std::vector<std::vector<Int>> shifts;  // shifts[r-1][t-1], t = 1..e-1
  Int cap = 0;
};

CapacityReport capacity(const Multipartition& rho, const ResiduePermutation& theta);

// Swap runners i and i+1 (mod e) of every component's beta set.
Multipartition scopes_psi(const Multipartition& lam, Int i);

// Map a whole block through the runner swap; requires that no member has a
// removable node of residue i+1.
Block scopes_block(const Block& b, Int i);

bool is_separable(const RootVector& omega, const RootVector& beta,
                  const std::vector<Int>& charges, Int budget = 0);

struct BlockClass {
  bool core_block = false;
  bool rock = false;
  std::optional<ResiduePermutation> theta;
  RootVector eta;
  Int d = 0;
  Int cap = 0;
};

// Decompose omega as eta + d*delta with a core block at eta, then test
// d against the capacity of that core for its residue permutation.
BlockClass classify_block(const RootVector& omega, const std::vector<Int>& charges);

}  // namespace klr
