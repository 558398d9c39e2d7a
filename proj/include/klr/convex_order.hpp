#pragma once

// Convex preorders on the positive roots, their construction from residue
// permutations, and the reindexing arithmetic that goes with a permutation.

#include <atomic>
#include <optional>
#include <vector>

#include "klr/root_system.hpp"

namespace klr {

enum class Rel { above, below, equivalent };

// A convex preorder given by an integer matrix H with e columns: beta is
// above gamma when ht(gamma) * H beta exceeds ht(beta) * H gamma
// lexicographically. Equivalence is only ever allowed between imaginary
// roots; a tie anywhere else means the matrix does not define a preorder.
//
// A matrix supplied by the caller is certified injective on the indivisible
// roots up to a height bound (default 4e), extended on demand when a
// comparison needs more. Preorders built from a residue permutation carry
// identity tie-break rows, which pin the root from its image, so they are
// valid at every height.
class ConvexPreorder {
public:
  ConvexPreorder(Int e, std::vector<std::vector<Int>> H);
  static ConvexPreorder from_permutation(const ResiduePermutation& theta);

  ConvexPreorder(const ConvexPreorder& other);
  ConvexPreorder& operator=(const ConvexPreorder& other);

  Rel compare(const RootVector& beta, const RootVector& gamma) const;

  Int e() const { return e_; }
  const std::vector<std::vector<Int>>& matrix() const { return H_; }
  bool constructed() const { return constructed_; }
  Int validated_height() const { return validated_.load(); }

private:
  ConvexPreorder() = default;

  Int e_ = 0;
  std::vector<std::vector<Int>> H_;
  bool constructed_ = false;
  mutable std::atomic<Int> validated_{0};

  std::vector<Int> apply(const RootVector& v) const;
  void certify(Int bound) const;
};

// The permutation theta with theta_a before theta_b exactly when the interval
// root from theta_a + 1 of length (theta_b - theta_a) mod e lies above delta;
// intransitive tournaments are rejected.
ResiduePermutation realized_permutation(const ConvexPreorder& order);

ConvexPreorder preorder_from_permutation(const ResiduePermutation& theta);

// gamma^theta_t = alpha_interval(theta_t + 1, (theta_{t+1} - theta_t) mod e),
// summed over t in [a, b]; defined for 1 <= a <= b <= e - 1.
RootVector gamma(const ResiduePermutation& theta, Int a, Int b);
inline RootVector gamma(const ResiduePermutation& theta, Int t) {
  return gamma(theta, t, t);
}

bool is_above_delta(const ConvexPreorder& order, const RootVector& beta);

enum class Side { weakly_above, strictly_above, weakly_below, strictly_below };

bool side_holds(const ConvexPreorder& order, const RootVector& beta, Side side,
                const RootVector& base);

// A multiset of positive roots summing to omega, each on the requested side
// of base; absent when no such decomposition exists. Exact dynamic
// programming over the box of vectors below omega; the budget caps the box.
std::optional<std::vector<RootVector>> decompose_into_roots(
    const ConvexPreorder& order, const RootVector& omega, Side side,
    const RootVector& base, Int budget = 5'000'000);

}  // namespace klr
